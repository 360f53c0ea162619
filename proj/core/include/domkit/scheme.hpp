#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domkit/dyadic.hpp"
#include "domkit/matching.hpp"

namespace domkit {

enum class GroupKind { singleton, coupled_pair, fixed_triple };

/// One independent group of a selection scheme. Outcomes are the equally
/// likely joint selections (one endpoint per group edge); a single outcome
/// means the group is fixed.
struct SchemeGroup {
  GroupKind kind;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> outcomes;

  bool fixed() const { return outcomes.size() == 1; }
};

/// A probability law selecting one endpoint per matching edge, factored into
/// independent groups: singletons (endpoint uniform), coupled pairs (two
/// anti-correlated joint outcomes), and fixed triples (deterministic).
/// Groups partition the matching's edges; the group list is ordered by each
/// group's lowest edge index.
struct SelectionScheme {
  Matching matching;
  std::vector<SchemeGroup> groups;
  std::vector<int> group_of_edge;  // parallel to matching.edges()

  /// Checks the partition, outcome shapes, and per-group uniform marginals
  /// of every non-fixed edge (by outcome enumeration). Throws on violation.
  void validate() const;

  bool fully_fixed() const {
    for (const SchemeGroup& g : groups) {
      if (!g.fixed()) return false;
    }
    return true;
  }
};

/// All-singleton scheme over a maximal matching.
SelectionScheme uniform_scheme(const Matching& m);

/// One endpoint per matching edge, drawn per group law; deterministic in the
/// seed (SplitMix64, one draw per non-fixed group in list order).
VertexSet sample(const SelectionScheme& scheme, uint64_t seed);

/// Unmatched vertices with no neighbor in d. Asserts that d together with
/// the result dominates g.
VertexSet uncovered_set(const Graph& g, const Matching& m, const VertexSet& d);

/// Exact P[u uncovered] by joint enumeration over the groups holding u's
/// matched neighbors. Errors with vertex_matched when u is in V(m).
Dyadic uncovered_probability(const Graph& g, const Matching& m, const SelectionScheme& scheme,
                             int u);

struct ExpectationReport {
  std::vector<std::pair<int, Dyadic>> per_vertex;  // unmatched vertex, P[u uncovered]
  Dyadic total;                                    // expected number uncovered
  std::optional<Dyadic> bound_rhs;                 // (n - 2|m|)/2^delta for regular g
};

ExpectationReport expectation_report(const Graph& g, const Matching& m,
                                     const SelectionScheme& scheme);

/// Exact factor 1 + 2(delta-1)/(delta 2^delta) relating a minimum maximal
/// matching to the dominating set built from it.
Rational transversal_bound_factor(int delta);

/// Method of conditional expectations: fixes groups in list order, each time
/// picking the outcome with the smallest exact conditional expectation. The
/// result leaves at most floor(initial expectation) vertices uncovered.
VertexSet derandomize_conditional(const Graph& g, const Matching& m,
                                  const SelectionScheme& scheme);

}  // namespace domkit
