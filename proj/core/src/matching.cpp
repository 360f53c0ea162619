#include "domkit/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace domkit {

Matching::Matching(const Graph& host, std::vector<Edge> edges)
    : host_(&host), edges_(std::move(edges)), covered_(host.order()),
      vertex_edge_(host.order(), -1) {
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.v >= host.order() || !host.adjacent(e.u, e.v)) {
      throw std::invalid_argument("matching edge not present in the host graph");
    }
    if (covered_.test(e.u) || covered_.test(e.v)) {
      throw std::invalid_argument("matching edges share an endpoint");
    }
    covered_.set(e.u);
    covered_.set(e.v);
    vertex_edge_[e.u] = vertex_edge_[e.v] = static_cast<int>(i);
  }
}

}  // namespace domkit
