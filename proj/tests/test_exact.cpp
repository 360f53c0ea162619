#include <doctest.h>

#include "domkit/exact.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domkit;
using namespace domkit::testing;

TEST_CASE("domination predicate") {
  Graph g = double_star();
  CHECK(is_dominating(g, VertexSet::of(6, {0, 1})));
  CHECK(is_dominating(g, g.all_vertices()));
  CHECK(!is_dominating(prism(), VertexSet::of(6, {2})));  // leaves 3 and 4 uncovered
}

TEST_CASE("maximal matching predicate") {
  Graph g = double_star();
  CHECK(is_maximal_matching(g, Matching(g, {Edge(0, 1)})));
  Graph cycle = c4();
  CHECK(!is_maximal_matching(cycle, Matching(cycle, {Edge(0, 1)})));
  Graph isolated(3, std::vector<std::pair<int, int>>{});
  CHECK(is_maximal_matching(isolated, Matching(isolated, {})));
}

TEST_CASE("domination numbers on the fixtures") {
  CHECK(domination_number(double_star()).value == 2);
  CHECK(domination_number(k4()).value == 1);
  CHECK(domination_number(petersen()).value == 3);
  CHECK(domination_number(prism()).value == 2);

  SolveResult r = domination_number(double_star());
  CHECK(is_dominating(double_star(), r.witness));
  CHECK(r.witness.count() == 2);
  CHECK(r.witness.to_vector() == std::vector<int>{0, 1});
  CHECK(r.nodes_explored > 0);
}

TEST_CASE("edge domination numbers on the fixtures") {
  CHECK(edge_domination_number(double_star()).value == 1);
  CHECK(edge_domination_number(prism()).value == 2);
  CHECK(edge_domination_number(k33()).value == 3);
  CHECK(edge_domination_number(petersen()).value == 3);

  EdgeSolveResult r = edge_domination_number(prism());
  Matching m(prism(), r.witness);
  CHECK(is_maximal_matching(prism(), m));
  CHECK(m.size() == 2);

  Graph isolated(3, std::vector<std::pair<int, int>>{});
  CHECK_THROWS_AS(edge_domination_number(isolated), Error);
}

TEST_CASE("solver cap") {
  SolverOptions small{4, true};
  CHECK_THROWS_AS(domination_number(prism(), small), Error);
  CHECK_THROWS_AS(edge_domination_number(prism(), small), Error);
  CHECK_THROWS_AS(domination_number(prism(), SolverOptions{200, true}), std::invalid_argument);
}

TEST_CASE("greedy maximal matching") {
  Matching m = greedy_maximal_matching(c4());
  CHECK(m.size() == 2);
  CHECK(m.edges() == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  CHECK(greedy_maximal_matching(single_edge()).size() == 1);
  Graph isolated(3, std::vector<std::pair<int, int>>{});
  CHECK(greedy_maximal_matching(isolated).size() == 0);
  Graph p = petersen();
  CHECK(is_maximal_matching(p, greedy_maximal_matching(p)));
}

TEST_CASE("degree-count inequality on regular graphs") {
  Graph g = prism();
  Matching minimum(g, edge_domination_number(g).witness);
  InequalityCheck chk = check_inequality_e1(g, minimum);
  CHECK(chk.holds);
  CHECK(chk.lhs == 6);
  CHECK(chk.rhs == 8);
  CHECK(chk.slack == 2);

  Graph p = petersen();
  InequalityCheck tight = check_inequality_e1(p, Matching(p, edge_domination_number(p).witness));
  CHECK(tight.holds);
  CHECK(tight.slack == 0);

  Graph complete = k4();
  InequalityCheck zero =
      check_inequality_e1(complete, Matching(complete, {Edge(0, 1), Edge(2, 3)}));
  CHECK(zero.holds);
  CHECK(zero.lhs == 0);

  CHECK_THROWS_AS(check_inequality_e1(double_star(), Matching(double_star(), {Edge(0, 1)})),
                  Error);
  Graph cycle = c4();
  CHECK_THROWS_AS(check_inequality_e1(cycle, Matching(cycle, {Edge(0, 1)})), Error);
}

TEST_CASE("line graph cross check") {
  for (const Graph& g : {double_star(), prism(), single_edge(), petersen(), k33()}) {
    LineGraphCrossCheck chk = cross_check_line_graph(g);
    CHECK(chk.consistent);
  }
  LineGraphCrossCheck star = cross_check_line_graph(double_star());
  CHECK(star.gamma_e == 1);
  CHECK(star.gamma_line == 1);
  CHECK(star.independent_line == 1);
  CHECK(cross_check_line_graph(prism()).gamma_e == 2);
}

TEST_CASE("solver agrees with naive enumeration on small random graphs") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_simple(2 + seed % 8, seed * 131 + 3, 45);
    NaiveResult naive = naive_domination(g);
    SolveResult solved = domination_number(g);
    REQUIRE(solved.value == naive.value);
    REQUIRE(solved.witness.to_vector() == naive.witness);

    if (g.edge_count() == 0) continue;
    NaiveMatchings ref = naive_edge_domination(g);
    EdgeSolveResult edge = edge_domination_number(g);
    REQUIRE(edge.value == ref.minimum);
    std::vector<int> got;
    for (const Edge& e : edge.witness) {
      const std::vector<Edge>& all = g.edges();
      got.push_back(static_cast<int>(std::find(all.begin(), all.end(), e) - all.begin()));
    }
    REQUIRE(got == ref.witness);
  }
}

TEST_CASE("regular fixtures satisfy the conjectured ordering") {
  for (const Graph& g : {prism(), k4(), petersen(), k33(), c4()}) {
    CHECK(domination_number(g).value <= edge_domination_number(g).value);
  }
}
