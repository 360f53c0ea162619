#include "domkit/cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "domkit/exact.hpp"
#include "domkit/graph6.hpp"

namespace domkit {
namespace cubic {

namespace {

struct ResidueSplit {
  VertexSet forced_covered;  // unmatched, adjacent to both endpoints of an edge
  VertexSet residual;        // unmatched, not forced
};

ResidueSplit residue_split(const Graph& g, const Matching& m) {
  ResidueSplit split{VertexSet(g.order()), VertexSet(g.order())};
  for (int u = 0; u < g.order(); ++u) {
    if (m.covers(u)) continue;
    bool forced = false;
    for (const Edge& e : m.edges()) {
      if (g.adjacent(u, e.u) && g.adjacent(u, e.v)) {
        forced = true;
        break;
      }
    }
    if (forced) {
      split.forced_covered.set(u);
    } else {
      split.residual.set(u);
    }
  }
  return split;
}

// Aligned/crossing sets for the labeled pair (u,v),(up,vp), over `residual`.
void pair_profile(const Graph& g, const VertexSet& residual, int u, int v, int up, int vp,
                  VertexSet& aligned, VertexSet& crossing) {
  residual.for_each([&](int x) {
    bool au = g.adjacent(x, u), av = g.adjacent(x, v);
    bool aup = g.adjacent(x, up), avp = g.adjacent(x, vp);
    if (au + av + aup + avp != 2) return;
    if ((au && aup) || (av && avp)) aligned.set(x);
    if ((au && avp) || (av && aup)) crossing.set(x);
  });
}

// Best couplable labeling of two edges, if any: |aligned| > |crossing|.
std::optional<CouplablePair> try_pair(const Graph& g, const VertexSet& residual, const Edge& a,
                                      const Edge& b) {
  std::optional<CouplablePair> best;
  int best_gap = 0;
  for (int flip = 0; flip < 2; ++flip) {
    int up = flip ? b.v : b.u;
    int vp = flip ? b.u : b.v;
    VertexSet aligned(g.order()), crossing(g.order());
    pair_profile(g, residual, a.u, a.v, up, vp, aligned, crossing);
    int gap = aligned.count() - crossing.count();
    if (gap > best_gap) {
      best_gap = gap;
      best = CouplablePair{a, b, a.u, a.v, up, vp, aligned, crossing};
    }
  }
  return best;
}

void require_cubic_graph(const Graph& g) {
  if (is_regular(g) != std::optional<int>(3)) {
    fail(errc::not_cubic, "graph is not 3-regular");
  }
}

}  // namespace

std::vector<CouplablePair> find_coupled_pairs(const Graph& g, const Matching& m,
                                              bool require_cubic) {
  if (require_cubic) require_cubic_graph(g);
  if (!is_maximal_matching(g, m)) fail(errc::not_maximal, "matching leaves an addable edge");

  const VertexSet residual = residue_split(g, m).residual;
  const std::vector<Edge>& edges = m.edges();
  std::vector<char> used(edges.size(), 0);
  std::vector<CouplablePair> pairs;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (used[i]) continue;
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (used[i] || used[j]) continue;
      if (auto pair = try_pair(g, residual, edges[i], edges[j])) {
        used[i] = used[j] = 1;
        pairs.push_back(std::move(*pair));
      }
    }
  }
  // Maximality: no two free edges may still admit a couplable labeling.
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (!used[i] && !used[j] && try_pair(g, residual, edges[i], edges[j])) {
        throw std::logic_error("pair collection is not maximal");
      }
    }
  }
  return pairs;
}

ResidueClassification classify_residue(const Graph& g, const Matching& m,
                                       const std::vector<CouplablePair>& pairs) {
  const int n = g.order();
  ResidueClassification cls{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n),
                            VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  ResidueSplit split = residue_split(g, m);
  cls.forced_covered = split.forced_covered;
  cls.residual = split.residual;
  for (const CouplablePair& pair : pairs) {
    cls.paired_cover.set(pair.u);
    cls.paired_cover.set(pair.v);
    cls.paired_cover.set(pair.up);
    cls.paired_cover.set(pair.vp);
  }
  cls.residual.for_each([&](int x) {
    int hits = (g.neighbors(x) & cls.paired_cover).count();
    if (hits == 1) cls.touched_once.set(x);
    if (hits >= 2) cls.touched_multi.set(x);
  });

  VertexSet sources = cls.forced_covered | cls.touched_multi;
  VertexSet source_neighbors(n);
  sources.for_each([&](int x) { source_neighbors |= g.neighbors(x); });
  for (const Edge& e : m.edges()) {
    if (!source_neighbors.test(e.u) && !source_neighbors.test(e.v)) continue;
    if (cls.paired_cover.test(e.u)) continue;  // paired edges sit fully inside
    cls.influenced_cover.set(e.u);
    cls.influenced_cover.set(e.v);
  }
  (cls.residual - cls.touched_once - cls.touched_multi).for_each([&](int x) {
    if (g.neighbors(x).intersects(cls.influenced_cover)) cls.influence_blocked.set(x);
  });
  cls.center_eligible =
      cls.residual - cls.touched_once - cls.touched_multi - cls.influence_blocked;

  cls.r = cls.residual.count();
  cls.r0 = cls.forced_covered.count();
  cls.r1 = cls.touched_once.count();
  cls.r2 = cls.touched_multi.count();
  cls.r3 = cls.influence_blocked.count();
  cls.r_eligible = cls.center_eligible.count();
  cls.p = static_cast<int>(pairs.size());

  if (is_regular(g) == std::optional<int>(3)) {
    if (2 * cls.r2 + cls.r1 > 8 * cls.p) {
      fail(errc::certificate_violation, "pair boundary count 2*r2 + r1 > 8p");
    }
    if (cls.r3 > 12 * cls.r0 + 6 * cls.r2) {
      fail(errc::certificate_violation, "influence count r3 > 12*r0 + 6*r2");
    }
    if (cls.r_eligible < cls.r - 13 * cls.r0 - 28 * cls.p) {
      fail(errc::certificate_violation, "eligible centers below r - 13*r0 - 28*p");
    }
  }
  return cls;
}

std::optional<VertexSet> dominating_triple_shortcut(const Graph& g,
                                                    const std::array<int, 3>& endpoints) {
  VertexSet d(g.order());
  for (int v : endpoints) d.set(v);
  if (is_dominating(g, d)) return d;
  return std::nullopt;
}

TripleDerandomization derandomize_triples(const Graph& g, const Matching& m,
                                          const std::vector<CouplablePair>& pairs,
                                          const ResidueClassification& cls,
                                          const PipelineOptions& opt) {
  require_cubic_graph(g);
  const std::vector<Edge>& edges = m.edges();
  std::vector<int> pair_of_edge(edges.size(), -1);
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    for (const Edge& e : {pairs[pi].e1, pairs[pi].e2}) {
      pair_of_edge[m.edge_of(e.u)] = static_cast<int>(pi);
    }
  }
  std::vector<int> triple_of_edge(edges.size(), -1);

  TripleDerandomization out;
  VertexSet pool = cls.center_eligible;
  while (!pool.empty()) {
    int z = pool.lowest();
    std::vector<int> nbrs = g.neighbors(z).to_vector();
    if (nbrs.size() != 3) fail(errc::not_cubic, "center degree is not 3");
    std::array<int, 3> chosen{nbrs[0], nbrs[1], nbrs[2]};
    std::array<Edge, 3> tau{Edge(0, 1), Edge(0, 1), Edge(0, 1)};
    std::array<int, 3> tau_idx{};
    VertexSet tau_vertices(g.order());
    for (int i = 0; i < 3; ++i) {
      int ei = m.edge_of(chosen[i]);
      if (ei < 0) {
        fail(errc::independence_violation,
             "center neighbor " + std::to_string(chosen[i]) + " is unmatched");
      }
      tau[i] = edges[ei];
      tau_idx[i] = ei;
      tau_vertices.set(edges[ei].u);
      tau_vertices.set(edges[ei].v);
    }
    if (tau_idx[0] == tau_idx[1] || tau_idx[1] == tau_idx[2] || tau_idx[0] == tau_idx[2]) {
      fail(errc::independence_violation, "center sees one edge twice");
    }
    for (int ei : tau_idx) {
      if (pair_of_edge[ei] >= 0 || triple_of_edge[ei] >= 0) {
        fail(errc::independence_violation, "triple edge is not an independent singleton");
      }
    }

    if (opt.enable_shortcut && m.size() >= 3) {
      if (auto d = dominating_triple_shortcut(g, chosen)) {
        out.traces.push_back(TripleTrace{z, tau, chosen, VertexSet(g.order()),
                                         VertexSet(g.order()), TripleCase::shortcut,
                                         Dyadic(0)});
        out.shortcut = std::move(d);
        return out;
      }
    }

    // Spill set: endpoints of outside edges reachable in one step from a
    // residual vertex that also sees the triple.
    VertexSet spill(g.order());
    cls.residual.for_each([&](int x) {
      if (!g.neighbors(x).intersects(tau_vertices)) return;
      g.neighbors(x).for_each([&](int w) {
        int ei = m.edge_of(w);
        if (ei < 0 || ei == tau_idx[0] || ei == tau_idx[1] || ei == tau_idx[2]) return;
        spill.set(edges[ei].u);
        spill.set(edges[ei].v);
      });
    });

    // Independence precondition: every residual vertex near the triple or
    // its spill set must have its matched neighbors in three distinct
    // groups, none already fixed.
    VertexSet zone = tau_vertices | spill;
    cls.residual.for_each([&](int x) {
      if (!g.neighbors(x).intersects(zone)) return;
      std::vector<long> keys;
      g.neighbors(x).for_each([&](int w) {
        int ei = m.edge_of(w);
        if (ei < 0) return;
        if (triple_of_edge[ei] >= 0) {
          fail(errc::independence_violation,
               "vertex " + std::to_string(x) + " leans on a fixed triple");
        }
        keys.push_back(pair_of_edge[ei] >= 0 ? -1 - pair_of_edge[ei] : static_cast<long>(ei));
      });
      std::sort(keys.begin(), keys.end());
      if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
        fail(errc::independence_violation,
             "vertex " + std::to_string(x) + " has two neighbors in one group");
      }
    });

    bool double_center = false;
    cls.residual.for_each([&](int x) {
      if (x != z && (g.neighbors(x) & tau_vertices).count() == 3) double_center = true;
    });
    TripleCase tag = double_center ? TripleCase::double_center : TripleCase::single_center;

    VertexSet removed(g.order());
    pool.for_each([&](int x) {
      if (g.neighbors(x).intersects(zone)) removed.set(x);
    });

    const int spill_limit = double_center ? 12 : 18;
    const int removed_limit = double_center ? 24 : 34;
    if (spill.count() > spill_limit) {
      fail(errc::certificate_violation, "spill set larger than " + std::to_string(spill_limit));
    }
    if (removed.count() > removed_limit) {
      fail(errc::certificate_violation,
           "center pool shrank by more than " + std::to_string(removed_limit));
    }

    pool -= removed;
    for (int ei : tau_idx) triple_of_edge[ei] = out.t;
    out.traces.push_back(TripleTrace{z, tau, chosen, spill, removed, tag,
                                     double_center ? Dyadic(1, 2) : Dyadic(1, 3)});
    ++out.t;
  }

  // Spill edges of every step stay unfixed through the whole run.
  for (const TripleTrace& trace : out.traces) {
    trace.spill.for_each([&](int w) {
      int ei = m.edge_of(w);
      if (ei >= 0 && triple_of_edge[ei] >= 0) {
        throw std::logic_error("spill edge ended up in a fixed triple");
      }
    });
  }
  if (out.t < (cls.r_eligible + 33) / 34) {
    throw std::logic_error("fewer triples than the eligible-center floor");
  }
  return out;
}

PipelineResult build_refined_scheme(const Graph& g, const Matching& m,
                                    const PipelineOptions& opt) {
  require_cubic_graph(g);
  if (!is_connected(g)) fail(errc::not_connected, "refinement runs per component");

  std::vector<CouplablePair> pairs = find_coupled_pairs(g, m);
  ResidueClassification cls = classify_residue(g, m, pairs);
  TripleDerandomization der = derandomize_triples(g, m, pairs, cls, opt);

  PipelineResult result{std::nullopt, uniform_scheme(m), std::move(cls), std::move(der.traces),
                        der.t};
  if (der.shortcut) {
    result.shortcut = std::move(der.shortcut);
    return result;
  }

  // Assemble the combined scheme, groups ordered by lowest edge index.
  const std::vector<Edge>& edges = m.edges();
  std::vector<int> pair_of_edge(edges.size(), -1), triple_of_edge(edges.size(), -1);
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    pair_of_edge[m.edge_of(pairs[pi].e1.u)] = static_cast<int>(pi);
    pair_of_edge[m.edge_of(pairs[pi].e2.u)] = static_cast<int>(pi);
  }
  for (size_t ti = 0; ti < result.traces.size(); ++ti) {
    for (const Edge& e : result.traces[ti].edges) {
      triple_of_edge[m.edge_of(e.u)] = static_cast<int>(ti);
    }
  }
  SelectionScheme scheme{m, {}, std::vector<int>(edges.size(), -1)};
  for (size_t ei = 0; ei < edges.size(); ++ei) {
    if (scheme.group_of_edge[ei] >= 0) continue;
    int gi = static_cast<int>(scheme.groups.size());
    if (int pi = pair_of_edge[ei]; pi >= 0) {
      const CouplablePair& pr = pairs[pi];
      scheme.groups.push_back(SchemeGroup{GroupKind::coupled_pair,
                                          {pr.e1, pr.e2},
                                          {{pr.u, pr.vp}, {pr.up, pr.v}}});
      scheme.group_of_edge[m.edge_of(pr.e1.u)] = gi;
      scheme.group_of_edge[m.edge_of(pr.e2.u)] = gi;
    } else if (int ti = triple_of_edge[ei]; ti >= 0) {
      const TripleTrace& tr = result.traces[ti];
      scheme.groups.push_back(SchemeGroup{GroupKind::fixed_triple,
                                          {tr.edges[0], tr.edges[1], tr.edges[2]},
                                          {{tr.chosen[0], tr.chosen[1], tr.chosen[2]}}});
      for (const Edge& e : tr.edges) scheme.group_of_edge[m.edge_of(e.u)] = gi;
    } else {
      const Edge& e = edges[ei];
      scheme.groups.push_back(
          SchemeGroup{GroupKind::singleton, {e}, {{e.u}, {e.v}}});
      scheme.group_of_edge[ei] = gi;
    }
  }
  scheme.validate();
  result.scheme = std::move(scheme);
  return result;
}

Certificate certify(const Graph& g, const Matching& m, const PipelineResult& pipeline) {
  if (pipeline.shortcut) {
    throw std::invalid_argument("shortcut results carry no scheme to certify");
  }
  const ResidueClassification& cls = pipeline.classification;
  const long n = g.order(), k = m.size();

  Certificate cert;
  cert.expected_uncovered = expectation_report(g, m, pipeline.scheme).total;
  cert.rhs_budget = Rational(cls.r - cls.p - pipeline.t, 8);
  cert.rhs_structural = Rational(33 * (n - 2 * k) - 20 * cls.r0 - 6 * cls.p, 272);
  cert.rhs_ratio = Rational(11 * k, 68);
  cert.rhs_total = Rational(79 * k, 68);

  const Dyadic& e = cert.expected_uncovered;
  cert.holds_budget = e.leq(cert.rhs_budget);
  cert.holds_structural = e.leq(cert.rhs_structural);
  cert.holds_ratio = e.leq(cert.rhs_ratio);
  cert.holds_total = Rational(k) + e.to_rational() <= cert.rhs_total;

  if (!cert.holds_budget || !cert.holds_structural || !cert.holds_ratio || !cert.holds_total) {
    std::string which = !cert.holds_budget       ? "budget"
                        : !cert.holds_structural ? "structural"
                        : !cert.holds_ratio      ? "ratio"
                                                 : "total";
    fail(errc::certificate_violation,
         which + " inequality failed on " + write_graph6(g) + " with E=" + e.to_fraction());
  }
  return cert;
}

}  // namespace cubic
}  // namespace domkit
