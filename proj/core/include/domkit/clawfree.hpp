#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domkit/matching.hpp"

namespace domkit {
namespace clawfree {

/// Local-search state over a fixed maximal matching: d holds one endpoint
/// per matching edge; b (uncovered) and c (covered exactly once) partition
/// progress over the unmatched vertices.
struct ExchangeState {
  VertexSet d, b, c;
};

ExchangeState make_state(const Graph& g, const Matching& m, const VertexSet& d);

/// Lower endpoint of every matching edge.
VertexSet initial_transversal(const Matching& m);

/// First canonical-order edge whose endpoint swap strictly shrinks b,
/// together with the replacement endpoint.
std::optional<std::pair<Edge, int>> single_swap_improvement(const Graph& g, const Matching& m,
                                                            const ExchangeState& state);

struct SigmaStep {
  int enter;    // v_i: joins d in the swap
  int leave;    // u_i: leaves d; matched to enter
  int witness;  // c_i: the once-covered vertex pinning leave in d
};

/// Alternating structure grown from an uncovered vertex. The swap replaces
/// every `leave` (steps plus terminal) by the matching partner `enter`.
struct SigmaSequence {
  int seed;            // the uncovered vertex the search started from
  int lone_neighbor;   // seed neighbor not adjacent to the other two
  int lone_partner;    // its matching partner (in d)
  int stay_neighbor;   // the adjacent-pair neighbor that keeps its edge fixed
  int stay_partner;    // its matching partner (in d)
  int lone_third;      // third neighbor of lone_neighbor
  std::vector<SigmaStep> steps;
  int terminal_leave, terminal_enter;
};

/// Grows the maximal alternating sequence from b: picks the unique adjacent
/// pair among b's neighbors (both orders tried), then extends greedily with
/// the lowest-index once-covered witness. Every forced adjacency is checked;
/// a breach raises structure_violation.
SigmaSequence build_sigma(const Graph& g, const Matching& m, const ExchangeState& state, int b);

/// Applies the sequence swap. The result is a transversal with strictly
/// fewer uncovered vertices; otherwise errors with no_improvement.
VertexSet path_swap(const Graph& g, const Matching& m, const ExchangeState& state,
                    const SigmaSequence& sigma);

/// Dominating transversal of a maximal matching in a cubic claw-free graph:
/// single swaps first, sequence swaps otherwise, halting when nothing is
/// uncovered. |result| = |m|; with m minimum this pins the domination number
/// at or below the edge domination number.
VertexSet dominating_transversal(const Graph& g, const Matching& m);

}  // namespace clawfree
}  // namespace domkit
