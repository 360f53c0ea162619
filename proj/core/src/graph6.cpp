#include "domkit/graph6.hpp"

#include <vector>

namespace domkit {

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr long kMaxOrder = (1 << 18) - 1;

int checked_byte(unsigned char c) {
  if (c < kBias || c > kMaxByte) {
    fail(errc::out_of_range_byte, "byte " + std::to_string(static_cast<int>(c)) +
                                      " outside the graph6 range [63,126]");
  }
  return c - kBias;
}
}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) fail(errc::malformed_header, "empty record");

  size_t pos = 0;
  long n;
  if (static_cast<unsigned char>(line[0]) == kMaxByte) {
    if (line.size() < 4) fail(errc::malformed_header, "truncated multi-byte size prefix");
    n = 0;
    for (pos = 1; pos < 4; ++pos) {
      n = (n << 6) | checked_byte(static_cast<unsigned char>(line[pos]));
    }
  } else {
    n = checked_byte(static_cast<unsigned char>(line[0]));
    pos = 1;
  }
  if (n < 1) fail(errc::malformed_header, "order 0 is not supported");

  const long bits = n * (n - 1) / 2;
  const long body = (bits + 5) / 6;
  if (static_cast<long>(line.size()) - static_cast<long>(pos) < body) {
    fail(errc::truncated_body, "expected " + std::to_string(body) + " payload bytes, got " +
                                   std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  long bit = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) acc = checked_byte(static_cast<unsigned char>(line[pos++]));
      if ((acc >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), std::span<const Edge>(edges));
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  if (n > kMaxOrder) {
    fail(errc::infeasible_parameters, "order exceeds the 18-bit graph6 size prefix");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  long bit = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) acc |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
      }
    }
  }
  if (bit % 6 != 0) out.push_back(static_cast<char>(acc + kBias));
  return out;
}

}  // namespace domkit
