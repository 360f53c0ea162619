#include <doctest.h>

#include "domkit/graph6.hpp"
#include "domkit/random_regular.hpp"
#include "fixtures.hpp"

using namespace domkit;
using namespace domkit::testing;

TEST_CASE("degree bookkeeping") {
  Graph g = double_star();
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(5) == 1);
  long total = 0;
  for (int v = 0; v < g.order(); ++v) total += g.degree(v);
  CHECK(total == 2 * g.edge_count());
}

TEST_CASE("regularity and connectivity predicates") {
  CHECK(!is_regular(double_star()));
  CHECK(is_regular(k4()) == 3);
  CHECK(is_connected(k4()));
  CHECK(is_regular(two_triangles()) == 2);
  CHECK(!is_connected(two_triangles()));
  CHECK(is_regular(petersen()) == 3);
}

TEST_CASE("claw detection") {
  CHECK(!is_claw_free(claw()));
  CHECK(is_claw_free(prism()));
  CHECK(!is_claw_free(petersen()));  // girth 5: every neighborhood is independent
  CHECK(is_claw_free(k4()));
  CHECK(is_claw_free(c4()));  // degree 2 cannot host a claw
}

TEST_CASE("line graph structure") {
  LineGraph star = line_graph(claw());
  CHECK(star.graph.order() == 3);
  CHECK(star.graph.edge_count() == 3);  // the three edges pairwise meet at the hub

  LineGraph cycle = line_graph(c4());
  CHECK(cycle.graph.order() == 4);
  CHECK(is_regular(cycle.graph) == 2);
  CHECK(is_connected(cycle.graph));

  LineGraph lone = line_graph(single_edge());
  CHECK(lone.graph.order() == 1);
  CHECK(lone.vertex_edge[0] == Edge(0, 1));

  Graph isolated(3, std::vector<std::pair<int, int>>{});
  CHECK_THROWS_AS(line_graph(isolated), Error);
}

TEST_CASE("line graphs are always claw-free") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_simple(3 + seed % 9, seed * 31 + 7, 55);
    if (g.edge_count() == 0) continue;
    CHECK(is_claw_free(line_graph(g).graph));
  }
}

TEST_CASE("random regular generation") {
  SUBCASE("K4 is the unique cubic graph on four vertices") {
    for (uint64_t seed : {0, 1, 99}) {
      Graph g = random_regular(4, 3, seed);
      CHECK(g.edge_count() == 6);
    }
  }
  SUBCASE("parity and range checks") {
    CHECK_THROWS_AS(random_regular(7, 3, 0), Error);
    CHECK_THROWS_AS(random_regular(4, 4, 0), Error);
    CHECK_THROWS_AS(random_regular(4, 3, 0, /*max_attempts=*/0), Error);
  }
  SUBCASE("regular, simple, deterministic per seed") {
    for (uint64_t seed = 0; seed < 24; ++seed) {
      Graph g = random_regular(10, 3, seed);
      CHECK(is_regular(g) == 3);
      Graph again = random_regular(10, 3, seed);
      CHECK(g.edges() == again.edges());
    }
    CHECK(random_regular(10, 3, 1).edges() != random_regular(10, 3, 2).edges());
  }
  SUBCASE("degree zero gives the edgeless graph") {
    CHECK(random_regular(5, 0, 3).edge_count() == 0);
  }
}

TEST_CASE("components and induced subgraphs") {
  Graph g = two_triangles();
  std::vector<VertexSet> comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].to_vector() == std::vector<int>{0, 1, 2});
  InducedSubgraph sub = induced_subgraph(g, comps[1]);
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.to_parent == std::vector<int>{3, 4, 5});
}

TEST_CASE("claw-free corpus builders stay cubic and claw-free") {
  for (int target : {8, 10, 12, 14}) {
    Graph g = cubic_clawfree(target, 17 + target);
    CHECK(g.order() == target);
    CHECK(is_regular(g) == 3);
    CHECK(is_claw_free(g));
    CHECK(is_connected(g));
  }
  Graph inflated = inflate_triangles(k4());
  CHECK(inflated.order() == 12);
  CHECK(is_regular(inflated) == 3);
  CHECK(is_claw_free(inflated));
}
