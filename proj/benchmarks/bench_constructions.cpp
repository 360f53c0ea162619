#include <benchmark/benchmark.h>

#include "domkit/clawfree.hpp"
#include "domkit/cubic.hpp"
#include "domkit/exact.hpp"
#include "domkit/random_regular.hpp"
#include "domkit/scheme.hpp"

using namespace domkit;

namespace {
Matching minimum_matching(const Graph& g) {
  return Matching(g, edge_domination_number(g).witness);
}
}  // namespace

static void BM_ExpectationReport(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 3);
  Matching m = minimum_matching(g);
  SelectionScheme s = uniform_scheme(m);
  for (auto _ : state) {
    ExpectationReport rep = expectation_report(g, m, s);
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(BM_ExpectationReport)->Arg(16)->Arg(24)->Arg(32);

static void BM_DerandomizeConditional(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 3);
  Matching m = minimum_matching(g);
  SelectionScheme s = uniform_scheme(m);
  for (auto _ : state) {
    VertexSet d = derandomize_conditional(g, m, s);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DerandomizeConditional)->Arg(16)->Arg(24);

static void BM_RefinedScheme(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 3);
  Matching m = minimum_matching(g);
  for (auto _ : state) {
    cubic::PipelineResult pipe = cubic::build_refined_scheme(g, m);
    benchmark::DoNotOptimize(pipe.t);
  }
}
BENCHMARK(BM_RefinedScheme)->Arg(16)->Arg(24)->Arg(32);

static void BM_Sampling(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 3);
  Matching m = minimum_matching(g);
  SelectionScheme s = uniform_scheme(m);
  uint64_t seed = 0;
  for (auto _ : state) {
    VertexSet d = sample(s, seed++);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Sampling)->Arg(16)->Arg(32);
