#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "domkit/bitset.hpp"
#include "domkit/errors.hpp"

namespace domkit {

/// Undirected edge in canonical order (u < v).
struct Edge {
  int u, v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) { assert(a != b); }

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }

  bool covers(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }
};

/// Immutable simple undirected graph on vertices 0..n-1 with per-vertex
/// neighbor bit vectors. Safe to share across threads after construction.
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long edge_count() const { return static_cast<long>(edges_.size()); }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return degrees_[v]; }
  int max_degree() const { return max_degree_; }

  /// All edges in canonical lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet closed_neighborhood(int v) const {
    VertexSet s = rows_[v];
    s.set(v);
    return s;
  }

  VertexSet all_vertices() const {
    VertexSet s(n_);
    return s.complement();
  }

 private:
  int n_;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  std::vector<Edge> edges_;
  int max_degree_ = 0;
};

/// Common degree of all vertices, or nullopt when degrees differ.
std::optional<int> is_regular(const Graph& g);

bool is_connected(const Graph& g);

/// True iff no vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);

struct LineGraph {
  Graph graph;                    // one vertex per edge of the source graph
  std::vector<Edge> vertex_edge;  // vertex i of `graph` is this source edge
};

/// Line graph: vertices are the source edges in canonical order, adjacent
/// iff the edges share an endpoint. Errors with empty_edge_set.
LineGraph line_graph(const Graph& g);

/// Connected components as vertex sets, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // subgraph vertex -> original vertex
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace domkit
