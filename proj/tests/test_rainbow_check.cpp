#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rainbowkit/oracles.hpp"
#include "rainbowkit/verify.hpp"
#include "support/builders.hpp"

using namespace rainbow;
using namespace rainbow::testing;

namespace {

EdgeColoring color(const Graph& g, std::vector<int> colors, int k) {
  return EdgeColoring(g, std::move(colors), k);
}

EdgeColoring random_coloring(const Graph& g, int k, std::mt19937& rng) {
  std::vector<int> colors(g.edge_count());
  std::uniform_int_distribution<int> d(0, k - 1);
  for (int& c : colors) c = d(rng);
  return EdgeColoring(g, std::move(colors), k);
}

}  // namespace

TEST_CASE("plain rainbow paths on small graphs") {
  Graph p3 = path_graph(3);
  CHECK_FALSE(rainbow_path_exists(p3, color(p3, {0, 0}, 1), 0, 2));
  CHECK(rainbow_path_exists(p3, color(p3, {0, 1}, 2), 0, 2));

  // C_4 edges in canonical order: (0,1) (0,3) (1,2) (2,3).
  Graph c4 = cycle_graph(4);
  CHECK_FALSE(rainbow_path_exists(c4, color(c4, {0, 1, 0, 1}, 2), 0, 2));
}

TEST_CASE("geodesic rainbow paths") {
  Graph c4 = cycle_graph(4);
  // (0,1)=c0 (0,3)=c1 (1,2)=c1 (2,3)=c0: the path 0-1-2 is a rainbow geodesic.
  CHECK(geodesic_rainbow_exists(c4, color(c4, {0, 1, 1, 0}, 2), 0, 2));
  // (0,1)=c0 (0,3)=c0 (1,2)=c0 (2,3)=c1: 0-3-2 works.
  CHECK(geodesic_rainbow_exists(c4, color(c4, {0, 0, 0, 1}, 2), 0, 2));

  Graph star = star_graph(3);
  // Same-colored spokes: the unique leaf-leaf geodesic repeats a color.
  auto chi = color(star, {0, 0, 1}, 2);
  CHECK_FALSE(geodesic_rainbow_exists(star, chi, 0, 1));
  CHECK(geodesic_rainbow_exists(star, chi, 0, 2));
}

TEST_CASE("verifier errors") {
  Graph p3 = path_graph(3);
  auto chi = color(p3, {0, 1}, 2);
  CHECK_THROWS_AS(rainbow_path_exists(p3, chi, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(rainbow_path_exists(p3, color(p3, {0, 1}, kColorCap + 1), 0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(rainbow_path_exists(path_graph(4), chi, 0, 2),
                  std::invalid_argument);  // shape mismatch
  CHECK_THROWS_AS(verify_pairs(p3, chi, PairSet({{0, 2}}), VerifyMode::directed),
                  std::invalid_argument);
}

TEST_CASE("verify_pairs aggregates") {
  Graph k3 = complete_graph(3);
  auto report = verify_pairs(k3, color(k3, {0, 0, 0}, 1), PairSet::all_pairs(3),
                             VerifyMode::plain);
  CHECK(report.count_satisfied == 3);
  CHECK(report.unsatisfied.empty());

  Graph c5 = cycle_graph(5);
  auto all_distinct = color(c5, {0, 1, 2, 3, 4}, 5);
  auto geo = verify_pairs(c5, all_distinct, PairSet::all_pairs(5), VerifyMode::geodesic);
  CHECK(geo.count_satisfied == 10);

  Graph p3 = path_graph(3);
  auto rep = verify_pairs(p3, color(p3, {0, 0}, 1), PairSet::all_pairs(3),
                          VerifyMode::plain);
  CHECK(rep.count_satisfied == 2);
  CHECK(rep.unsatisfied.pairs() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("directed semantics: either direction counts") {
  Graph chain = directed_chain_with_chord(5);
  // All-distinct colors rainbow-connect everything.
  std::vector<int> distinct(chain.edge_count());
  for (int i = 0; i < chain.edge_count(); ++i) distinct[i] = i;
  auto chi = EdgeColoring(chain, distinct, chain.edge_count());
  auto rep = verify_pairs(chain, chi, PairSet::all_pairs(5), VerifyMode::directed);
  CHECK(rep.unsatisfied.empty());
}

TEST_CASE("adjacent pairs are always satisfied in plain and geodesic modes") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_connected_graph(rng, n, 0.5);
    auto chi = random_coloring(g, 2, rng);
    for (const auto& [u, v] : g.edges()) {
      CHECK(rainbow_path_exists(g, chi, u, v));
      CHECK(geodesic_rainbow_exists(g, chi, u, v));
    }
  }
}

TEST_CASE("geodesic rainbow implies plain rainbow") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_connected_graph(rng, n, 0.4);
    auto chi = random_coloring(g, 1 + static_cast<int>(rng() % 3), rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (geodesic_rainbow_exists(g, chi, u, v))
          CHECK(rainbow_path_exists(g, chi, u, v));
  }
}

TEST_CASE("subset-state search agrees with exhaustive path enumeration") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7 vertices
    Graph g = oracle::random_connected_graph(rng, n, 0.5);
    int k = 1 + static_cast<int>(rng() % 4);  // up to 4 colors
    auto chi = random_coloring(g, k, rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        CHECK(rainbow_path_exists(g, chi, u, v) ==
              oracle::rainbow_path_bruteforce(g, chi, u, v, VerifyMode::plain));
        CHECK(geodesic_rainbow_exists(g, chi, u, v) ==
              oracle::rainbow_path_bruteforce(g, chi, u, v, VerifyMode::geodesic));
      }
  }
}

TEST_CASE("directed search agrees with exhaustive enumeration") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_connected_digraph(rng, n, 0.4);
    auto chi = random_coloring(g, 1 + static_cast<int>(rng() % 3), rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(rainbow_path_exists(g, chi, u, v) ==
              oracle::rainbow_path_bruteforce(g, chi, u, v, VerifyMode::directed));
  }
}

TEST_CASE("color permutations leave verifier answers unchanged") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_connected_graph(rng, n, 0.5);
    int k = 2 + static_cast<int>(rng() % 2);
    auto chi = random_coloring(g, k, rng);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> permuted(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) permuted[e] = perm[chi.color_at(e)];
    auto chi2 = EdgeColoring(g, permuted, k);
    auto a = verify_pairs(g, chi, PairSet::all_pairs(n), VerifyMode::plain);
    auto b = verify_pairs(g, chi2, PairSet::all_pairs(n), VerifyMode::plain);
    CHECK(a.satisfied.pairs() == b.satisfied.pairs());
    auto ga = verify_pairs(g, chi, PairSet::all_pairs(n), VerifyMode::geodesic);
    auto gb = verify_pairs(g, chi2, PairSet::all_pairs(n), VerifyMode::geodesic);
    CHECK(ga.satisfied.pairs() == gb.satisfied.pairs());
  }
}
