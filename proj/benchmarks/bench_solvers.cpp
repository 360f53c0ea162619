#include <benchmark/benchmark.h>

#include "domkit/exact.hpp"
#include "domkit/random_regular.hpp"

using namespace domkit;

static void BM_DominationCubic(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 7);
  SolverOptions opt;
  opt.want_witness = false;
  for (auto _ : state) {
    SolveResult r = domination_number(g, opt);
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(domination_number(g, opt).nodes_explored);
}
BENCHMARK(BM_DominationCubic)->Arg(16)->Arg(24)->Arg(32)->Arg(40);

static void BM_EdgeDominationCubic(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 7);
  SolverOptions opt;
  opt.want_witness = false;
  for (auto _ : state) {
    EdgeSolveResult r = edge_domination_number(g, opt);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_EdgeDominationCubic)->Arg(16)->Arg(24)->Arg(32);

static void BM_WitnessReconstruction(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) {
    SolveResult r = domination_number(g);
    benchmark::DoNotOptimize(r.witness);
  }
}
BENCHMARK(BM_WitnessReconstruction)->Arg(16)->Arg(24);

static void BM_LineGraphCrossCheck(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) {
    LineGraphCrossCheck chk = cross_check_line_graph(g);
    benchmark::DoNotOptimize(chk.consistent);
  }
}
BENCHMARK(BM_LineGraphCrossCheck)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
