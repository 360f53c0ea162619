#pragma once

#include <vector>

#include "domkit/graph.hpp"
#include "domkit/random_regular.hpp"
#include "domkit/rng.hpp"

namespace domkit::testing {

// Two adjacent degree-3 centers, two leaves each: gamma = 2 but a single
// edge is already a maximal matching.
inline Graph double_star() {
  return Graph(6, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

// Triangles 012 and 345 joined by the perfect matching 03, 14, 25.
inline Graph prism() {
  return Graph(6, std::vector<std::pair<int, int>>{
                      {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Outer cycle 0..4, spokes i~i+5, inner pentagram 5-7-9-6-8-5.
inline Graph petersen() {
  return Graph(10, std::vector<std::pair<int, int>>{{0, 1},
                                                    {1, 2},
                                                    {2, 3},
                                                    {3, 4},
                                                    {0, 4},
                                                    {0, 5},
                                                    {1, 6},
                                                    {2, 7},
                                                    {3, 8},
                                                    {4, 9},
                                                    {5, 7},
                                                    {7, 9},
                                                    {6, 9},
                                                    {6, 8},
                                                    {5, 8}});
}

inline Graph k4() {
  return Graph(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph c4() {
  return Graph(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Graph k33() {
  return Graph(6, std::vector<std::pair<int, int>>{
                      {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline Graph claw() {
  return Graph(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
}

inline Graph single_edge() { return Graph(2, std::vector<std::pair<int, int>>{{0, 1}}); }

inline Graph two_triangles() {
  return Graph(6, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

// Sub-cubic coupling gadget: matching edges 01 and 23 plus one vertex (4)
// adjacent to 0 and 2 in the aligned position.
inline Graph pair_gadget() {
  return Graph(5, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {0, 4}, {2, 4}});
}

// Cubic graph on 10 vertices whose maximal matching {01, 23, 45} forces the
// pair {01, 23}: the four unmatched vertices 6..9 all sit in the aligned
// position of that pair.
inline Graph paired_cubic10() {
  return Graph(10, std::vector<std::pair<int, int>>{{0, 1},
                                                    {2, 3},
                                                    {4, 5},
                                                    {0, 6},
                                                    {0, 7},
                                                    {1, 8},
                                                    {1, 9},
                                                    {2, 6},
                                                    {2, 7},
                                                    {3, 8},
                                                    {3, 9},
                                                    {4, 6},
                                                    {4, 8},
                                                    {5, 7},
                                                    {5, 9}});
}

// Cubic graph on 12 vertices where the maximal matching {01,23,45,67}
// couples {01,23} with aligned {8,9} against crossing {10}; vertex 11 sits
// on both endpoints of 67 and so is always covered.
inline Graph crossing_cubic12() {
  return Graph(12, std::vector<std::pair<int, int>>{{0, 1},
                                                    {2, 3},
                                                    {4, 5},
                                                    {6, 7},
                                                    {0, 8},
                                                    {2, 8},
                                                    {4, 8},
                                                    {1, 9},
                                                    {3, 9},
                                                    {5, 9},
                                                    {0, 10},
                                                    {3, 10},
                                                    {6, 10},
                                                    {4, 11},
                                                    {6, 11},
                                                    {7, 11},
                                                    {1, 2},
                                                    {5, 7}});
}

// An edge is diamond-safe when each endpoint's other two neighbors are
// adjacent; splicing a diamond into it preserves 3-regularity and
// claw-freeness and adds four vertices.
inline std::vector<Edge> diamond_safe_edges(const Graph& g) {
  std::vector<Edge> safe;
  for (const Edge& e : g.edges()) {
    bool ok = true;
    for (int endpoint : {e.u, e.v}) {
      std::vector<int> rest;
      g.neighbors(endpoint).for_each([&](int w) {
        if (w != e.other(endpoint)) rest.push_back(w);
      });
      if (rest.size() != 2 || !g.adjacent(rest[0], rest[1])) ok = false;
    }
    if (ok) safe.push_back(e);
  }
  return safe;
}

inline Graph insert_diamond(const Graph& g, const Edge& target) {
  int base = g.order();
  int w = base, x = base + 1, y = base + 2, z = base + 3;
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) {
    if (!(e == target)) es.emplace_back(e.u, e.v);
  }
  es.insert(es.end(), {{w, x}, {w, y}, {x, y}, {x, z}, {y, z}, {target.u, w}, {target.v, z}});
  return Graph(base + 4, es);
}

/// Connected cubic claw-free graph on `target` vertices (target even, >= 4),
/// grown from K4 or the prism by seeded diamond splices.
inline Graph cubic_clawfree(int target, uint64_t seed) {
  Graph g = (target % 4 == 0) ? k4() : prism();
  SplitMix64 rng(seed);
  while (g.order() < target) {
    std::vector<Edge> safe = diamond_safe_edges(g);
    g = insert_diamond(g, safe[rng.next_below(safe.size())]);
  }
  return g;
}

/// Replaces every vertex of a cubic graph by a triangle; ports are assigned
/// in canonical edge order. The result is cubic and claw-free.
inline Graph inflate_triangles(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  std::vector<int> next_port(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    es.insert(es.end(),
              {{3 * v, 3 * v + 1}, {3 * v, 3 * v + 2}, {3 * v + 1, 3 * v + 2}});
  }
  for (const Edge& e : g.edges()) {
    es.emplace_back(3 * e.u + next_port[e.u]++, 3 * e.v + next_port[e.v]++);
  }
  return Graph(3 * g.order(), es);
}

/// Triangle inflation of a seeded cubic multigraph (loops rejected,
/// parallel edges kept): together with the diamond splices this walks the
/// whole connected cubic claw-free family beyond K4. Parallel base edges
/// turn into diamond-like double links, so unmatched ports can arise.
inline Graph inflate_multigraph(int base_order, uint64_t seed) {
  SplitMix64 rng(seed);
  while (true) {
    std::vector<int> stubs;
    for (int v = 0; v < base_order; ++v) stubs.insert(stubs.end(), 3, v);
    for (size_t i = stubs.size() - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[rng.next_below(i + 1)]);
    }
    bool loop = false;
    std::vector<std::pair<int, int>> base;
    for (size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        loop = true;
        break;
      }
      base.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (loop) continue;
    std::vector<std::pair<int, int>> es;
    std::vector<int> port(base_order, 0);
    for (int v = 0; v < base_order; ++v) {
      es.insert(es.end(),
                {{3 * v, 3 * v + 1}, {3 * v, 3 * v + 2}, {3 * v + 1, 3 * v + 2}});
    }
    for (auto [a, b] : base) es.emplace_back(3 * a + port[a]++, 3 * b + port[b]++);
    Graph g(3 * base_order, es);
    if (is_connected(g)) return g;
  }
}

/// Seeded simple graph: every pair flips an independent coin at the given
/// percent density.
inline Graph random_simple(int n, uint64_t seed, int percent = 50) {
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_below(100) < static_cast<uint64_t>(percent)) es.emplace_back(u, v);
    }
  return Graph(n, es);
}

}  // namespace domkit::testing
