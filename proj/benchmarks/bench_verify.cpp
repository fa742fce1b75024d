#include <benchmark/benchmark.h>

#include <random>

#include "rainbowkit/oracles.hpp"
#include "rainbowkit/verify.hpp"

using namespace rainbow;

namespace {

EdgeColoring striped(const Graph& g, int k) {
  std::vector<int> colors(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) colors[e] = e % k;
  return EdgeColoring(g, std::move(colors), k);
}

}  // namespace

static void BM_VerifyAllPairsPlain(benchmark::State& state) {
  std::mt19937 rng(1);
  int n = static_cast<int>(state.range(0));
  Graph g = oracle::random_connected_graph(rng, n, 0.3);
  auto chi = striped(g, 4);
  auto pairs = PairSet::all_pairs(n);
  for (auto _ : state) {
    auto report = verify_pairs(g, chi, pairs, VerifyMode::plain);
    benchmark::DoNotOptimize(report.count_satisfied);
  }
}
BENCHMARK(BM_VerifyAllPairsPlain)->Arg(10)->Arg(20)->Arg(40);

static void BM_VerifyAllPairsGeodesic(benchmark::State& state) {
  std::mt19937 rng(2);
  int n = static_cast<int>(state.range(0));
  Graph g = oracle::random_connected_graph(rng, n, 0.3);
  auto chi = striped(g, 4);
  auto pairs = PairSet::all_pairs(n);
  for (auto _ : state) {
    auto report = verify_pairs(g, chi, pairs, VerifyMode::geodesic);
    benchmark::DoNotOptimize(report.count_satisfied);
  }
}
BENCHMARK(BM_VerifyAllPairsGeodesic)->Arg(10)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
