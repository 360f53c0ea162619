#include "domkit/scheme.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "domkit/exact.hpp"
#include "domkit/rng.hpp"

namespace domkit {

namespace {

int find_edge_index(const Matching& m, const Edge& e) {
  const std::vector<Edge>& edges = m.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) throw std::invalid_argument("edge not in matching");
  return static_cast<int>(it - edges.begin());
}

}  // namespace

void SelectionScheme::validate() const {
  const std::vector<Edge>& edges = matching.edges();
  std::vector<int> seen(edges.size(), 0);
  if (group_of_edge.size() != edges.size()) {
    throw std::logic_error("group_of_edge size mismatch");
  }
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const SchemeGroup& grp = groups[gi];
    size_t want_edges = grp.kind == GroupKind::singleton ? 1
                        : grp.kind == GroupKind::coupled_pair ? 2
                                                              : 3;
    if (grp.edges.size() != want_edges) throw std::logic_error("group edge count mismatch");
    if (grp.outcomes.empty() || grp.outcomes.size() > 2) {
      throw std::logic_error("group outcome count out of range");
    }
    if (grp.kind == GroupKind::fixed_triple && grp.outcomes.size() != 1) {
      throw std::logic_error("fixed triple must have one outcome");
    }
    for (const Edge& e : grp.edges) {
      int idx = find_edge_index(matching, e);
      if (group_of_edge[idx] != static_cast<int>(gi)) {
        throw std::logic_error("group_of_edge inconsistent");
      }
      ++seen[idx];
      // Uniform marginal: each endpoint selected in exactly half the
      // outcomes of a non-fixed group.
      int hits_u = 0, hits_v = 0;
      for (const std::vector<int>& oc : grp.outcomes) {
        int in_edge = 0;
        for (int x : oc) {
          if (x == e.u) ++hits_u, ++in_edge;
          if (x == e.v) ++hits_v, ++in_edge;
        }
        if (in_edge != 1) throw std::logic_error("outcome must pick one endpoint per edge");
      }
      if (grp.outcomes.size() == 2 && (hits_u != 1 || hits_v != 1)) {
        throw std::logic_error("non-fixed edge marginal is not uniform");
      }
    }
    if (grp.kind == GroupKind::coupled_pair && grp.outcomes.size() == 2) {
      for (int x : grp.outcomes[0]) {
        for (int y : grp.outcomes[1]) {
          if (x == y) throw std::logic_error("coupled outcomes must be disjoint");
        }
      }
    }
  }
  for (int c : seen) {
    if (c != 1) throw std::logic_error("groups do not partition the matching");
  }
}

SelectionScheme uniform_scheme(const Matching& m) {
  if (!is_maximal_matching(m.host(), m)) {
    fail(errc::not_maximal, "uniform scheme requires a maximal matching");
  }
  SelectionScheme s{m, {}, {}};
  s.group_of_edge.resize(m.edges().size());
  for (size_t i = 0; i < m.edges().size(); ++i) {
    const Edge& e = m.edges()[i];
    s.groups.push_back(SchemeGroup{GroupKind::singleton, {e}, {{e.u}, {e.v}}});
    s.group_of_edge[i] = static_cast<int>(i);
  }
  return s;
}

VertexSet sample(const SelectionScheme& scheme, uint64_t seed) {
  SplitMix64 rng(seed);
  VertexSet d(scheme.matching.host().order());
  for (const SchemeGroup& grp : scheme.groups) {
    const std::vector<int>& oc = grp.fixed() ? grp.outcomes[0] : grp.outcomes[rng.next_bit()];
    for (int v : oc) d.set(v);
  }
  return d;
}

VertexSet uncovered_set(const Graph& g, const Matching& m, const VertexSet& d) {
  VertexSet b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    if (m.covers(u)) continue;
    if (!g.neighbors(u).intersects(d)) b.set(u);
  }
  VertexSet db = d | b;
  if (!is_dominating(g, db)) {
    throw std::logic_error("transversal plus uncovered set fails to dominate");
  }
  return b;
}

Dyadic uncovered_probability(const Graph& g, const Matching& m, const SelectionScheme& scheme,
                             int u) {
  if (m.covers(u)) fail(errc::vertex_matched, "vertex " + std::to_string(u) + " is matched");
  // Groups owning u's matched neighbors, deduplicated, in list order.
  std::vector<int> rel;
  g.neighbors(u).for_each([&](int w) {
    int e = m.edge_of(w);
    if (e < 0) return;
    int gi = scheme.group_of_edge[e];
    if (std::find(rel.begin(), rel.end(), gi) == rel.end()) rel.push_back(gi);
  });
  std::sort(rel.begin(), rel.end());

  const VertexSet& nbrs = g.neighbors(u);
  unsigned random_groups = 0;
  for (int gi : rel) {
    if (!scheme.groups[gi].fixed()) ++random_groups;
  }
  if (random_groups > 24) {
    fail(errc::cap_exceeded, "joint outcome enumeration over " +
                                 std::to_string(random_groups) + " groups");
  }
  // Joint enumeration over the relevant groups.
  uint64_t uncovered_outcomes = 0;
  for (uint64_t it = 0; it < (uint64_t{1} << random_groups); ++it) {
    uint64_t code = it;
    bool covered = false;
    for (int gi : rel) {
      const SchemeGroup& grp = scheme.groups[gi];
      size_t which = 0;
      if (!grp.fixed()) {
        which = code & 1;
        code >>= 1;
      }
      for (int v : grp.outcomes[which]) {
        if (nbrs.test(v)) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) ++uncovered_outcomes;
  }
  return Dyadic(BigInt(uncovered_outcomes), random_groups);
}

ExpectationReport expectation_report(const Graph& g, const Matching& m,
                                     const SelectionScheme& scheme) {
  ExpectationReport report;
  for (int u = 0; u < g.order(); ++u) {
    if (m.covers(u)) continue;
    Dyadic p = uncovered_probability(g, m, scheme, u);
    if (p < Dyadic(0) || Dyadic(1) < p) throw std::logic_error("probability out of range");
    report.total += p;
    report.per_vertex.emplace_back(u, std::move(p));
  }
  std::optional<int> delta = is_regular(g);
  if (delta) {
    report.bound_rhs = Dyadic(g.order() - 2 * m.size(), static_cast<unsigned>(*delta));
    bool uniform = true;
    for (const SchemeGroup& grp : scheme.groups) {
      if (grp.kind != GroupKind::singleton || grp.fixed()) uniform = false;
    }
    if (uniform && !(report.total <= *report.bound_rhs)) {
      throw std::logic_error("uniform-scheme expectation exceeds its bound");
    }
  }
  return report;
}

Rational transversal_bound_factor(int delta) {
  if (delta < 1) throw std::invalid_argument("degree must be positive");
  BigInt den = BigInt(delta) << delta;  // delta * 2^delta
  return Rational(1) + Rational(2 * (delta - 1), den);
}

VertexSet derandomize_conditional(const Graph& g, const Matching& m,
                                  const SelectionScheme& scheme) {
  SelectionScheme work = scheme;
  Dyadic current = expectation_report(g, m, work).total;
  const Dyadic initial = current;
  for (SchemeGroup& grp : work.groups) {
    if (grp.fixed()) continue;
    // Conditional expectation is re-evaluated per outcome; no caching.
    size_t best = 0;
    std::optional<Dyadic> best_value;
    std::vector<std::vector<int>> outcomes = grp.outcomes;
    for (size_t oc = 0; oc < outcomes.size(); ++oc) {
      grp.outcomes = {outcomes[oc]};
      Dyadic value = expectation_report(g, m, work).total;
      if (!best_value || value < *best_value) {
        best_value = value;
        best = oc;
      }
    }
    grp.outcomes = {outcomes[best]};
    if (!(*best_value <= current)) {
      throw std::logic_error("conditional expectation increased while fixing a group");
    }
    current = *best_value;
  }
  VertexSet d = sample(work, 0);
  if (BigInt(uncovered_set(g, m, d).count()) > initial.floor()) {
    throw std::logic_error("derandomized uncovered count above floor of the expectation");
  }
  return d;
}

}  // namespace domkit
