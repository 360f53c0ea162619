#pragma once

#include <array>
#include <optional>
#include <vector>

#include "domkit/scheme.hpp"

namespace domkit {
namespace cubic {

/// Two matching edges whose endpoint choices are anti-correlated across two
/// joint outcomes. Under the stored labeling (u,v) / (up,vp), `aligned`
/// holds the residual vertices seeing exactly {u,up} or {v,vp} (covered by
/// both outcomes) and `crossing` those seeing exactly {u,vp} or {v,up};
/// coupling requires |aligned| > |crossing|.
struct CouplablePair {
  Edge e1, e2;
  int u, v, up, vp;
  VertexSet aligned, crossing;

  std::array<int, 2> outcome_a() const { return {u, vp}; }
  std::array<int, 2> outcome_b() const { return {up, v}; }
};

/// Partition of the unmatched vertices driving the triple derandomization.
struct ResidueClassification {
  VertexSet forced_covered;   // adjacent to both endpoints of a matching edge
  VertexSet residual;         // remaining unmatched vertices
  VertexSet paired_cover;     // the 4p endpoints of coupled edges
  VertexSet touched_once;     // residual with exactly one neighbor in paired_cover
  VertexSet touched_multi;    // residual with two or more
  VertexSet influenced_cover; // endpoints of edges carrying a neighbor of
                              // forced_covered or touched_multi, off paired_cover
  VertexSet influence_blocked;  // remaining residual adjacent to influenced_cover
  VertexSet center_eligible;    // residual minus all of the above

  int r = 0, r0 = 0, r1 = 0, r2 = 0, r3 = 0, r_eligible = 0, p = 0;
};

enum class TripleCase {
  double_center,  // a second residual vertex sees all three triple edges
  single_center,
  shortcut,
};

/// Bookkeeping for one derandomized triple: the spill set (endpoints of
/// outside edges that counted vertices lean on), the vertices retired from
/// the center pool, and the guaranteed reduction credit.
struct TripleTrace {
  int center;
  std::array<Edge, 3> edges;
  std::array<int, 3> chosen;
  VertexSet spill;    // |spill| <= 18, <= 12 in the double_center case
  VertexSet removed;  // |removed| <= 34, <= 24 in the double_center case
  TripleCase tag;
  Dyadic reduction_credit;  // 1/4 double_center, else 1/8
};

struct PipelineOptions {
  /// Return the candidate triple endpoints outright whenever they dominate
  /// the whole graph (and 3 <= |m|), instead of continuing to derandomize.
  bool enable_shortcut = true;
};

struct TripleDerandomization {
  std::vector<TripleTrace> traces;
  std::optional<VertexSet> shortcut;  // dominating triple, when taken
  int t = 0;                          // number of derandomized triples
};

/// Greedy maximal collection of disjoint couplable pairs in canonical pair
/// order. On return no two free edges admit a labeling with
/// |aligned| > |crossing| (verified). `require_cubic` may be dropped for
/// sub-cubic test gadgets.
std::vector<CouplablePair> find_coupled_pairs(const Graph& g, const Matching& m,
                                              bool require_cubic = true);

ResidueClassification classify_residue(const Graph& g, const Matching& m,
                                       const std::vector<CouplablePair>& pairs);

/// Repeatedly picks the lowest eligible center, fixes the three edges at its
/// neighbors to the center's side, and retires every residual vertex seeing
/// the triple or its spill set. Asserts the independence precondition at
/// every step (errors with independence_violation on breach).
TripleDerandomization derandomize_triples(const Graph& g, const Matching& m,
                                          const std::vector<CouplablePair>& pairs,
                                          const ResidueClassification& cls,
                                          const PipelineOptions& opt = {});

/// The triple endpoints when they dominate g, otherwise nothing.
std::optional<VertexSet> dominating_triple_shortcut(const Graph& g,
                                                    const std::array<int, 3>& endpoints);

struct PipelineResult {
  std::optional<VertexSet> shortcut;  // when set, scheme is the plain uniform one
  SelectionScheme scheme;
  ResidueClassification classification;
  std::vector<TripleTrace> traces;
  int t = 0;
};

/// Full refinement for a connected cubic graph: couple a maximal pair
/// collection, then derandomize triples; combines everything into one
/// selection scheme (or returns the shortcut dominating set).
PipelineResult build_refined_scheme(const Graph& g, const Matching& m,
                                    const PipelineOptions& opt = {});

/// Per-instance certificate. All comparisons are exact (cross-multiplied
/// integers); a failed inequality raises certificate_violation.
struct Certificate {
  Dyadic expected_uncovered;
  // (a) E <= (r - p - t)/8
  Rational rhs_budget;
  // (b) E <= 33/272 (n - 2|m|) - 5/68 r0 - 3/136 p
  Rational rhs_structural;
  // (c) E <= 11/68 |m|
  Rational rhs_ratio;
  // (d) |m| + E <= 79/68 |m|
  Rational rhs_total;
  bool holds_budget, holds_structural, holds_ratio, holds_total;
};

Certificate certify(const Graph& g, const Matching& m, const PipelineResult& pipeline);

}  // namespace cubic
}  // namespace domkit
