#pragma once

#include <stdexcept>
#include <string>

namespace domkit {

enum class errc {
  // graph6
  malformed_header,
  truncated_body,
  out_of_range_byte,
  // generation
  infeasible_parameters,
  retry_limit_exceeded,
  // graphs / solvers
  empty_edge_set,
  cap_exceeded,
  not_regular,
  not_maximal,
  not_cubic,
  not_connected,
  not_claw_free,
  vertex_matched,
  // construction pipelines
  independence_violation,
  certificate_violation,
  structure_violation,
  no_improvement,
  no_improving_move,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::malformed_header: return "malformed_header";
    case errc::truncated_body: return "truncated_body";
    case errc::out_of_range_byte: return "out_of_range_byte";
    case errc::infeasible_parameters: return "infeasible_parameters";
    case errc::retry_limit_exceeded: return "retry_limit_exceeded";
    case errc::empty_edge_set: return "empty_edge_set";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::not_regular: return "not_regular";
    case errc::not_maximal: return "not_maximal";
    case errc::not_cubic: return "not_cubic";
    case errc::not_connected: return "not_connected";
    case errc::not_claw_free: return "not_claw_free";
    case errc::vertex_matched: return "vertex_matched";
    case errc::independence_violation: return "independence_violation";
    case errc::certificate_violation: return "certificate_violation";
    case errc::structure_violation: return "structure_violation";
    case errc::no_improvement: return "no_improvement";
    case errc::no_improving_move: return "no_improving_move";
  }
  return "unknown";
}

}  // namespace domkit
