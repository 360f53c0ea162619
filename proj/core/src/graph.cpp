#include "domkit/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace domkit {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  rows_.assign(n, VertexSet(n));
  edges_.assign(edges.begin(), edges.end());
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (rows_[e.u].test(e.v)) throw std::invalid_argument("duplicate edge");
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
  }
  degrees_.resize(n);
  for (int v = 0; v < n; ++v) {
    degrees_[v] = rows_[v].count();
    max_degree_ = std::max(max_degree_, degrees_[v]);
  }
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : Graph(n, [&] {
        std::vector<Edge> es;
        es.reserve(edges.size());
        for (auto [a, b] : edges) es.emplace_back(a, b);
        return es;
      }()) {}

std::optional<int> is_regular(const Graph& g) {
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

bool is_connected(const Graph& g) {
  VertexSet seen(g.order());
  std::vector<int> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](int w) {
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    });
  }
  return seen.count() == g.order();
}

bool is_claw_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nb = g.neighbors(v).to_vector();
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
        }
      }
  }
  return true;
}

LineGraph line_graph(const Graph& g) {
  const std::vector<Edge>& es = g.edges();
  if (es.empty()) fail(errc::empty_edge_set, "line graph of an edgeless graph");
  const int m = static_cast<int>(es.size());
  std::vector<Edge> le;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (es[i].covers(es[j].u) || es[i].covers(es[j].v)) le.emplace_back(i, j);
    }
  return LineGraph{Graph(m, le), es};
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (int s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    VertexSet comp(g.order());
    std::vector<int> stack{s};
    comp.set(s);
    seen.set(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.neighbors(v).for_each([&](int w) {
        if (!comp.test(w)) {
          comp.set(w);
          seen.set(w);
          stack.push_back(w);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> to_parent = keep.to_vector();
  std::vector<int> to_sub(g.order(), -1);
  for (size_t i = 0; i < to_parent.size(); ++i) to_sub[to_parent[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (keep.test(e.u) && keep.test(e.v)) es.emplace_back(to_sub[e.u], to_sub[e.v]);
  }
  return InducedSubgraph{Graph(static_cast<int>(to_parent.size()), es), std::move(to_parent)};
}

}  // namespace domkit
