#include <benchmark/benchmark.h>

#include "domkit/graph6.hpp"
#include "domkit/random_regular.hpp"

using namespace domkit;

static void BM_WriteGraph6(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 11);
  for (auto _ : state) {
    std::string record = write_graph6(g);
    benchmark::DoNotOptimize(record);
  }
}
BENCHMARK(BM_WriteGraph6)->Arg(20)->Arg(62)->Arg(200);

static void BM_ParseGraph6(benchmark::State& state) {
  std::string record = write_graph6(random_regular(static_cast<int>(state.range(0)), 3, 11));
  for (auto _ : state) {
    Graph g = parse_graph6(record);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_ParseGraph6)->Arg(20)->Arg(62)->Arg(200);

static void BM_RandomRegular(benchmark::State& state) {
  uint64_t seed = 0;
  for (auto _ : state) {
    Graph g = random_regular(static_cast<int>(state.range(0)), 3, seed++);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_RandomRegular)->Arg(16)->Arg(64);
