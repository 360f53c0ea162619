#pragma once

#include <vector>

#include "domkit/graph.hpp"

namespace domkit {

/// A set of pairwise-disjoint edges of a host graph. Edges are kept in
/// canonical order; the covered vertex set and a vertex->edge index are
/// cached. The host graph must outlive the matching.
class Matching {
 public:
  Matching(const Graph& host, std::vector<Edge> edges);

  const Graph& host() const { return *host_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const VertexSet& covered() const { return covered_; }

  bool covers(int v) const { return covered_.test(v); }
  /// Index into edges() of the edge covering v, or -1.
  int edge_of(int v) const { return vertex_edge_[v]; }

 private:
  const Graph* host_;
  std::vector<Edge> edges_;
  VertexSet covered_;
  std::vector<int> vertex_edge_;
};

}  // namespace domkit
