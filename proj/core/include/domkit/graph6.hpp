#pragma once

#include <string>
#include <string_view>

#include "domkit/graph.hpp"

namespace domkit {

// graph6 records, bit-exact:
//   header  N(n) = byte n+63 for n <= 62, else byte 126 followed by three
//           bytes carrying n in 18 bits (big-endian 6-bit groups, each +63)
//   body    upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ...
//           (column-major), zero-padded to a multiple of 6, each 6-bit
//           group +63, most significant bit first
// One record per line; parse accepts a record with or without the trailing
// newline, write returns the record without it.

Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

}  // namespace domkit
