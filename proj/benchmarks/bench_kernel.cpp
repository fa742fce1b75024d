#include <benchmark/benchmark.h>

#include <random>

#include "rainbowkit/kernel.hpp"
#include "rainbowkit/oracles.hpp"

using namespace rainbow;

static void BM_Kernelize(benchmark::State& state) {
  std::mt19937 rng(7);
  int n = static_cast<int>(state.range(0));
  Graph g = oracle::random_connected_graph(rng, n, 0.2);
  for (auto _ : state) {
    auto res = kernelize(g, 3);
    benchmark::DoNotOptimize(res.outcome);
  }
}
BENCHMARK(BM_Kernelize)->Arg(20)->Arg(40)->Arg(80);

static void BM_BfsLayerColoring(benchmark::State& state) {
  std::mt19937 rng(8);
  int n = static_cast<int>(state.range(0));
  Graph g = oracle::random_connected_graph(rng, n, 0.1);
  for (auto _ : state) {
    auto chi = bfs_layer_coloring(g, 0);
    benchmark::DoNotOptimize(chi.k());
  }
}
BENCHMARK(BM_BfsLayerColoring)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
