#include <benchmark/benchmark.h>

#include "rainbowkit/solver.hpp"

using namespace rainbow;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::undirected(n, std::move(edges));
}

}  // namespace

static void BM_RcExactCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = rc_exact(g);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_RcExactCycle)->Arg(6)->Arg(8)->Arg(10);

static void BM_SrcExactCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = src_exact(g);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_SrcExactCycle)->Arg(6)->Arg(8);

static void BM_Maxpairs2Cycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = maxpairs2_exact(g);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_Maxpairs2Cycle)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
