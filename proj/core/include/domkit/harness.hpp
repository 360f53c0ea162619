#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domkit/dyadic.hpp"
#include "domkit/graph.hpp"

namespace domkit {
namespace harness {

enum MethodMask : unsigned {
  kMethodT1 = 1,   // sampled random transversal
  kMethodT1d = 2,  // conditional-expectation derandomization
  kMethodT2 = 4,   // cubic refinement (pairs + triples)
  kMethodT3 = 8,   // claw-free exchange
  kMethodAll = 15,
};

enum class ReportFormat { jsonl, csv };

struct RunConfig {
  int cap = 64;
  uint64_t seed = 0;
  int trials = 1;  // samples behind the t1 size
  unsigned methods = kMethodAll;
  int jobs = 1;
  ReportFormat format = ReportFormat::jsonl;
  bool fail_fast = false;
};

struct RunSummary {
  long processed = 0;
  long skipped = 0;       // unparseable records
  long cap_exceeded = 0;  // records above the solver cap
  long regular = 0;
  std::optional<Rational> min_ratio, max_ratio;  // gamma/gamma_e over regular graphs
  long conjecture_violations = 0;
  long certificate_violations = 0;
  bool stopped_early = false;

  int exit_code() const {
    if (conjecture_violations > 0) return 2;
    if (certificate_violations > 0) return 3;
    return 0;
  }
};

/// Per-record verdicts and construction sizes for one input graph.
struct ConjectureRecord {
  long graph_id = 0;  // 1-based input line number
  std::string graph6;
  int n = 0;
  std::optional<int> delta;
  bool connected = false;
  bool claw_free = false;
  std::optional<int> gamma, gamma_e;
  std::optional<Rational> ratio;
  std::optional<bool> conjecture_holds;  // null for non-regular / edgeless inputs
  std::vector<int> gamma_witness;
  std::vector<std::pair<int, int>> gamma_e_witness;
  std::optional<bool> cross_check_ok;
  std::optional<bool> inequality_e1_ok;
  std::optional<int> t1_sampled, t1_derand, t2, t3;
  bool t2_shortcut = false;
  std::optional<bool> t2_certified;
  bool construction_ok = true;  // inline checks on every method that ran
  std::optional<std::string> error;
};

/// Computes the record for one already-parsed graph.
ConjectureRecord evaluate_graph(const Graph& g, long graph_id, const RunConfig& config);

/// Streams graph6 records from `in`, emits one report line per record plus a
/// header and summary, and accumulates violations. Unparseable lines are
/// logged to `err`, counted, and skipped. Record processing is parallel
/// under config.jobs with input-ordered output; reruns are byte-identical.
RunSummary run_check(const RunConfig& config, std::istream& in, std::ostream& out,
                     std::ostream& err);

struct GenConfig {
  int n = 10;
  int delta = 3;
  long count = 1;
  uint64_t seed = 0;
};

/// Deterministic stream of random regular graphs, one graph6 line each.
void run_gen(const GenConfig& config, std::ostream& out);

struct ThresholdVerdict {
  bool holds;            // (1 + ln(delta+1))/(delta+1) <= delta/(4 delta - 2), certified
  double lhs_approx;     // display only
  Rational rhs;          // delta/(4 delta - 2)
};

/// Certified comparison of the logarithmic domination bound against the
/// matching lower bound: decided with exact rational Taylor intervals for
/// exp, never floating point.
ThresholdVerdict degree_threshold(int delta);

}  // namespace harness
}  // namespace domkit
