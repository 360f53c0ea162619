#include "domkit/exact.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace domkit {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

// One-word view of a graph for the solver hot loops (order <= 64).
struct WordGraph {
  int n;
  int maxdeg;
  uint64_t all;
  std::vector<uint64_t> open;    // N(v)
  std::vector<uint64_t> closed;  // N[v]

  explicit WordGraph(const Graph& g)
      : n(g.order()), maxdeg(g.max_degree()), all(n == 64 ? ~uint64_t{0} : bit(n) - 1),
        open(n), closed(n) {
    for (int v = 0; v < n; ++v) {
      open[v] = g.neighbors(v).word(0);
      closed[v] = open[v] | bit(v);
    }
  }
};

void check_cap(const Graph& g, const SolverOptions& opt) {
  if (opt.cap > kSolverMaxOrder) {
    throw std::invalid_argument("solver cap above " + std::to_string(kSolverMaxOrder));
  }
  if (g.order() > opt.cap) {
    fail(errc::cap_exceeded, "order " + std::to_string(g.order()) + " above solver cap " +
                                 std::to_string(opt.cap));
  }
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Feasibility search shared by the domination and independent domination
// solvers: is there a (maximal-independent when `independent`) dominating
// set of size <= limit containing `seed` and avoiding `forbidden`?
struct DomSearch {
  const WordGraph& w;
  bool independent;
  uint64_t forbidden;
  int limit;
  uint64_t nodes = 0;
  uint64_t witness = 0;

  bool run(uint64_t seed) {
    uint64_t dominated = 0, conflict = 0;
    int size = std::popcount(seed);
    if (size > limit) return false;
    uint64_t s = seed;
    while (s) {
      int v = std::countr_zero(s);
      s &= s - 1;
      dominated |= w.closed[v];
      conflict |= w.open[v];
    }
    if (independent && (seed & conflict)) return false;
    return rec(seed, dominated, conflict, size);
  }

  bool rec(uint64_t chosen, uint64_t dominated, uint64_t conflict, int size) {
    ++nodes;
    if (dominated == w.all) {
      witness = chosen;
      return true;
    }
    if (size == limit) return false;
    uint64_t undom = w.all & ~dominated;
    if (size + ceil_div(std::popcount(undom), w.maxdeg + 1) > limit) return false;
    int v = std::countr_zero(undom);
    uint64_t cands = w.closed[v] & ~forbidden & ~chosen;
    if (independent) cands &= ~conflict;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      if (rec(chosen | bit(u), dominated | w.closed[u], conflict | w.open[u], size + 1)) {
        return true;
      }
    }
    return false;
  }
};

SolveResult solve_domination(const Graph& g, const SolverOptions& opt, bool independent) {
  check_cap(g, opt);
  WordGraph w(g);
  uint64_t nodes = 0;
  int value = -1;
  for (int k = std::max(1, ceil_div(w.n, w.maxdeg + 1)); k <= w.n; ++k) {
    DomSearch s{w, independent, 0, k};
    bool ok = s.run(0);
    nodes += s.nodes;
    if (ok) {
      value = k;
      break;
    }
  }
  // Every graph has a maximal independent set, so value is always found.
  VertexSet witness(g.order());
  if (opt.want_witness) {
    uint64_t in = 0, out = 0;
    for (int v = 0; v < w.n && std::popcount(in) < value; ++v) {
      DomSearch s{w, independent, out, value};
      bool ok = s.run(in | bit(v));
      nodes += s.nodes;
      if (ok) {
        in |= bit(v);
      } else {
        out |= bit(v);
      }
    }
    for (int v = 0; v < w.n; ++v) {
      if (in & bit(v)) witness.set(v);
    }
  }
  return SolveResult{value, witness, nodes};
}

// Maximal-matching feasibility: is there a maximal matching of size <= limit
// containing `seed` edges and avoiding `forbidden` ones? Branches on the
// lowest-index edge with both endpoints unmatched; leaves are maximal by
// construction.
struct MatchSearch {
  const Graph& g;
  const std::vector<Edge>& edges;
  const std::vector<uint64_t>& masks;
  const std::vector<char>& forbidden;
  int limit;
  uint64_t nodes = 0;
  std::vector<int> chosen;
  std::vector<int> witness;

  bool rec(uint64_t covered, int size) {
    ++nodes;
    int open_edge = -1;
    int addable = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (masks[i] & covered) continue;
      ++addable;
      if (open_edge < 0) open_edge = static_cast<int>(i);
    }
    if (open_edge < 0) {
      witness = chosen;
      return true;
    }
    if (size == limit) return false;
    if (size + ceil_div(addable, 2 * g.max_degree() - 1) > limit) return false;
    const Edge& e = edges[open_edge];
    for (size_t i = open_edge; i < edges.size(); ++i) {
      if (forbidden[i] || (masks[i] & covered)) continue;
      if (!edges[i].covers(e.u) && !edges[i].covers(e.v)) continue;
      chosen.push_back(static_cast<int>(i));
      if (rec(covered | masks[i], size + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  VertexSet covered = d;
  d.for_each([&](int v) { covered |= g.neighbors(v); });
  return covered.count() == g.order();
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  for (const Edge& e : g.edges()) {
    if (!m.covers(e.u) && !m.covers(e.v)) return false;
  }
  return true;
}

SolveResult domination_number(const Graph& g, const SolverOptions& opt) {
  return solve_domination(g, opt, /*independent=*/false);
}

SolveResult independent_domination_number(const Graph& g, const SolverOptions& opt) {
  return solve_domination(g, opt, /*independent=*/true);
}

EdgeSolveResult edge_domination_number(const Graph& g, const SolverOptions& opt) {
  check_cap(g, opt);
  const std::vector<Edge>& edges = g.edges();
  if (edges.empty()) fail(errc::empty_edge_set, "edge domination of an edgeless graph");
  std::vector<uint64_t> masks(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) masks[i] = bit(edges[i].u) | bit(edges[i].v);
  std::vector<char> forbidden(edges.size(), 0);

  uint64_t nodes = 0;
  int value = -1;
  std::vector<int> opt_witness;
  int lb = std::max(1, ceil_div(static_cast<int>(edges.size()), 2 * g.max_degree() - 1));
  for (int k = lb; k <= static_cast<int>(edges.size()); ++k) {
    MatchSearch s{g, edges, masks, forbidden, k};
    bool ok = s.rec(0, 0);
    nodes += s.nodes;
    if (ok) {
      value = k;
      opt_witness = s.witness;
      break;
    }
  }

  std::vector<Edge> witness;
  if (opt.want_witness) {
    std::vector<int> in;
    uint64_t in_cover = 0;
    for (size_t e = 0; e < edges.size() && static_cast<int>(in.size()) < value; ++e) {
      if (masks[e] & in_cover) {
        forbidden[e] = 1;
        continue;
      }
      MatchSearch s{g, edges, masks, forbidden, value};
      s.chosen = in;
      s.chosen.push_back(static_cast<int>(e));
      bool ok = s.rec(in_cover | masks[e], static_cast<int>(in.size()) + 1);
      nodes += s.nodes;
      if (ok) {
        in.push_back(static_cast<int>(e));
        in_cover |= masks[e];
      } else {
        forbidden[e] = 1;
      }
    }
    for (int e : in) witness.push_back(edges[e]);
  } else {
    for (int e : opt_witness) witness.push_back(edges[e]);
  }
  return EdgeSolveResult{value, witness, nodes};
}

Matching greedy_maximal_matching(const Graph& g) {
  VertexSet covered(g.order());
  std::vector<Edge> chosen;
  for (const Edge& e : g.edges()) {
    if (!covered.test(e.u) && !covered.test(e.v)) {
      covered.set(e.u);
      covered.set(e.v);
      chosen.push_back(e);
    }
  }
  return Matching(g, std::move(chosen));
}

InequalityCheck check_inequality_e1(const Graph& g, const Matching& m) {
  std::optional<int> delta = is_regular(g);
  if (!delta) fail(errc::not_regular, "degree sequence is not constant");
  if (!is_maximal_matching(g, m)) fail(errc::not_maximal, "matching leaves an addable edge");
  long n = g.order(), k = m.size();
  long lhs = *delta * (n - 2 * k);
  long rhs = 2 * (*delta - 1) * k;
  return InequalityCheck{lhs, rhs, lhs <= rhs, rhs - lhs};
}

LineGraphCrossCheck cross_check_line_graph(const Graph& g, const SolverOptions& opt) {
  SolverOptions value_only = opt;
  value_only.want_witness = false;
  EdgeSolveResult ed = edge_domination_number(g, value_only);
  LineGraph lg = line_graph(g);
  if (lg.graph.order() > opt.cap) {
    fail(errc::cap_exceeded, "line graph order " + std::to_string(lg.graph.order()) +
                                 " above solver cap");
  }
  SolveResult dom = domination_number(lg.graph, value_only);
  SolveResult ind = independent_domination_number(lg.graph, value_only);
  bool consistent = ed.value == dom.value && dom.value == ind.value;
  return LineGraphCrossCheck{ed.value, dom.value, ind.value, consistent};
}

}  // namespace domkit
