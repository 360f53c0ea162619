#pragma once

#include <cstdint>

#include "domkit/matching.hpp"

namespace domkit {

/// Hard ceiling for the exhaustive solvers: vertex sets fit one machine word.
inline constexpr int kSolverMaxOrder = 64;

struct SolverOptions {
  int cap = kSolverMaxOrder;  // orders above this error with cap_exceeded
  bool want_witness = true;   // lex-smallest witness reconstruction
};

struct SolveResult {
  int value;
  VertexSet witness;  // empty when want_witness is off
  uint64_t nodes_explored;
};

struct EdgeSolveResult {
  int value;
  std::vector<Edge> witness;
  uint64_t nodes_explored;
};

bool is_dominating(const Graph& g, const VertexSet& d);

/// True iff no edge of g has both endpoints outside V(m).
bool is_maximal_matching(const Graph& g, const Matching& m);

/// Minimum dominating set by branch-and-bound: branch on the lowest-index
/// undominated vertex over its closed neighborhood; prune with the
/// (max degree + 1) covering bound. Witness is the lexicographically
/// smallest optimal set.
SolveResult domination_number(const Graph& g, const SolverOptions& opt = {});

/// Minimum maximal matching by branch-and-bound: branch on the lowest-index
/// edge with both endpoints unmatched over the edges that could cover it.
SolveResult independent_domination_number(const Graph& g, const SolverOptions& opt = {});

EdgeSolveResult edge_domination_number(const Graph& g, const SolverOptions& opt = {});

/// Deterministic maximal matching from a canonical-order greedy scan; the
/// fallback for graphs above the exact cap.
Matching greedy_maximal_matching(const Graph& g);

struct InequalityCheck {
  long lhs, rhs;
  bool holds;
  long slack;  // rhs - lhs
};

/// For a delta-regular graph with maximal matching m, evaluates
/// delta*(n - 2|m|) <= 2*(delta-1)*|m|, returning both sides.
InequalityCheck check_inequality_e1(const Graph& g, const Matching& m);

struct LineGraphCrossCheck {
  int gamma_e;            // minimum maximal matching of g
  int gamma_line;         // domination number of the line graph
  int independent_line;   // independent domination number of the line graph
  bool consistent;        // all three coincide
};

/// Computes the edge domination number of g together with the domination
/// and independent domination numbers of its line graph.
LineGraphCrossCheck cross_check_line_graph(const Graph& g, const SolverOptions& opt = {});

}  // namespace domkit
