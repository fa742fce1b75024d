#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rainbowkit/io.hpp"
#include "rainbowkit/kernel.hpp"
#include "rainbowkit/oracles.hpp"
#include "rainbowkit/solver.hpp"
#include "rainbowkit/verify.hpp"
#include "support/builders.hpp"

using namespace rainbow;
using namespace rainbow::testing;

namespace {

SolveLimits wide() {
  SolveLimits lim;
  lim.max_edges = 1000;
  return lim;
}

int satisfied_total(const Graph& g, const EdgeColoring& chi) {
  return verify_pairs(g, chi, PairSet::all_pairs(g.vertex_count()), VerifyMode::plain)
      .count_satisfied;
}

// K_q plus a pendant path of the given length hanging off vertex 0.
Graph clique_with_tail(int q, int tail) {
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) edges.push_back({u, v});
  for (int t = 0; t < tail; ++t) edges.push_back({t == 0 ? 0 : q + t - 1, q + t});
  return Graph::undirected(q + tail, std::move(edges));
}

}  // namespace

TEST_CASE("bfs layer coloring certifies |O_v| pairs") {
  Graph p4 = path_graph(4);
  auto chi = bfs_layer_coloring(p4, 0);
  CHECK(satisfied_total(p4, chi) >= p4.edge_count() + 2);

  CHECK_NOTHROW(bfs_layer_coloring(complete_graph(4), 0));  // vacuous but valid

  Graph c5 = cycle_graph(5);
  auto rep = verify_pairs(c5, bfs_layer_coloring(c5, 0), anti_edges(c5),
                          VerifyMode::plain);
  CHECK(rep.count_satisfied >= 2);
}

TEST_CASE("clique coloring, L2 nonempty") {
  Graph g = clique_with_tail(4, 2);
  CliqueColoringInfo info;
  auto chi = clique_coloring(g, {0, 1, 2, 3}, 2, &info);
  CHECK(info.case_id == 1);
  CHECK(satisfied_total(g, chi) >= g.edge_count() + 2);
}

TEST_CASE("clique coloring, enough clique-to-L1 anti-edges") {
  // K_4 plus a vertex seeing exactly two clique vertices.
  Graph g = Graph::undirected(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
  CliqueColoringInfo info;
  auto chi = clique_coloring(g, {0, 1, 2, 3}, 2, &info);
  CHECK(info.case_id == 2);
  CHECK(satisfied_total(g, chi) >= g.edge_count() + 2);
}

TEST_CASE("clique coloring, greedy loop") {
  // K_5 plus two non-adjacent vertices each seeing four clique vertices.
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
  for (int w : {0, 1, 2, 3}) edges.push_back({w, 5});
  for (int w : {0, 1, 2, 3}) edges.push_back({w, 6});
  Graph g = Graph::undirected(7, std::move(edges));
  CliqueColoringInfo info;
  auto chi = clique_coloring(g, {0, 1, 2, 3, 4}, 3, &info);
  CHECK(info.case_id == 3);
  CHECK(info.loop_iterations == 1);
  CHECK_FALSE(info.recolored);
  CHECK(satisfied_total(g, chi) >= g.edge_count() + 3);
}

TEST_CASE("clique coloring, recoloring branch") {
  // M = {0,1}; vertex 2 sees only clique vertex 0, vertex 3 sees both.
  // The loop paints (2,0) red via the shared neighbor 0; vertex 2 then has
  // all-red clique edges and the recolor turns (0,1) blue, which is what
  // rainbow-connects the pair (1,2).
  Graph g = Graph::undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}});
  CliqueColoringInfo info;
  auto chi = clique_coloring(g, {0, 1}, 2, &info);
  CHECK(info.case_id == 3);
  CHECK(info.recolored);
  CHECK(chi.color_of(0, 1) == 1);
  CHECK(satisfied_total(g, chi) >= g.edge_count() + 2);
}

TEST_CASE("clique coloring rejects bad inputs") {
  Graph g = clique_with_tail(4, 2);
  CHECK_THROWS_AS(clique_coloring(g, {0, 1, 4}, 2, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(clique_coloring(g, {0, 1, 2}, 4, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(clique_coloring(complete_graph(4), {0, 1, 2, 3}, 2, nullptr),
                  std::invalid_argument);  // no anti-edges at all
}

TEST_CASE("component coloring certifies component pairs") {
  // Star center: the neighborhood is independent, so H is one component.
  Graph star = star_graph(4);
  auto chi = component_coloring(star, 4);
  auto rep = verify_pairs(star, chi, anti_edges(star), VerifyMode::plain);
  CHECK(rep.count_satisfied >= 3);

  CHECK_NOTHROW(component_coloring(complete_graph(4), 0));  // vacuous

  Graph p3 = path_graph(3);
  auto rep3 = verify_pairs(p3, component_coloring(p3, 1), anti_edges(p3),
                           VerifyMode::plain);
  CHECK(rep3.count_satisfied >= 1);
}

TEST_CASE("greedy clique extension") {
  Graph g = clique_with_tail(4, 1);
  auto m = greedy_extend_clique(g, {1, 2});
  CHECK(m == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(greedy_extend_clique(g, {0, 4, 3}), std::invalid_argument);
}

TEST_CASE("kernelize on named instances") {
  auto no = kernelize(complete_graph(4), 1);
  CHECK(no.outcome == KernelOutcome::no);

  auto yes = kernelize(path_graph(5), 2);
  CHECK(yes.outcome == KernelOutcome::yes);
  REQUIRE(yes.witness.has_value());
  CHECK(yes.certified_count >= 4 + 2);

  auto kern = kernelize(cycle_graph(5), 3);
  CHECK(kern.outcome == KernelOutcome::kernel);
  REQUIRE(kern.kernel.has_value());
  CHECK(kern.kernel->vertex_count() == 5);
  CHECK(kern.kernel->vertex_count() <= 4 * 3);
  CHECK(kern.trace.chosen_v == 0);
  CHECK(kern.trace.isolated_count == 0);
  CHECK(kern.trace.h_components.size() == 1);
  CHECK(kern.trace.h_components[0].size() == 2);

  CHECK_THROWS_AS(kernelize(Graph::undirected(4, {{0, 1}, {2, 3}}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernelize(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("kernelize takes the clique route when H has many isolated vertices") {
  // K_7 minus the matching {(1,2),(3,4)}: every vertex misses at most one
  // other, the early-yes stage passes, and vertex 0's complement
  // neighborhood has two isolated vertices.
  std::vector<Edge> edges;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v)
      if (!(u == 1 && v == 2) && !(u == 3 && v == 4)) edges.push_back({u, v});
  Graph g = Graph::undirected(7, std::move(edges));
  auto res = kernelize(g, 2);
  CHECK(res.outcome == KernelOutcome::yes);
  REQUIRE(res.trace.clique.has_value());
  CHECK(res.trace.clique->size() >= 2);
  for (size_t i = 0; i < res.trace.clique->size(); ++i)
    for (size_t j = i + 1; j < res.trace.clique->size(); ++j)
      CHECK(g.has_edge((*res.trace.clique)[i], (*res.trace.clique)[j]));
}

TEST_CASE("isolated complement vertices plus the pivot form a clique") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_connected_graph(rng, n, 0.6);
    int v = 0;
    std::vector<int> seed = {v};
    for (int u : g.neighbors(v)) {
      bool isolated = true;
      for (int w : g.neighbors(v))
        if (w != u && !g.has_edge(u, w)) {
          isolated = false;
          break;
        }
      if (isolated) seed.push_back(u);
    }
    // Must not throw: the seed is a clique, and extension keeps it one.
    auto m = greedy_extend_clique(g, seed);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = i + 1; j < m.size(); ++j) CHECK(g.has_edge(m[i], m[j]));
  }
}

TEST_CASE("decide_maxpairs2 on named instances") {
  Graph c5 = cycle_graph(5);
  auto direct = maxpairs2_exact(c5, wide());
  auto via_kernel = decide_maxpairs2(c5, 3, wide());
  CHECK(via_kernel.yes == (direct.value >= c5.edge_count() + 3));

  CHECK(decide_maxpairs2(path_graph(3), 1, wide()).yes);
  CHECK_FALSE(decide_maxpairs2(complete_graph(5), 1, wide()).yes);
  CHECK_FALSE(decide_maxpairs2(complete_graph(5), 3, wide()).yes);
}

TEST_CASE("decide_maxpairs2 agrees with the direct optimum, random sample") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_connected_graph(rng, n, 0.45);
    int direct = maxpairs2_exact(g, wide()).value;
    for (int k = 1; k <= 3; ++k) {
      auto decision = decide_maxpairs2(g, k, wide());
      CHECK(decision.yes == (direct >= g.edge_count() + k));
      if (decision.yes) {
        REQUIRE(decision.witness.has_value());
        CHECK(satisfied_total(g, *decision.witness) >= g.edge_count() + k);
      }
      auto kr = kernelize(g, k);
      if (kr.outcome == KernelOutcome::kernel)
        CHECK(kr.kernel->vertex_count() <= 4 * k);
      if (kr.outcome == KernelOutcome::no)
        CHECK(anti_edges(g).size() < k);
    }
  }
}

TEST_CASE("kernel result serializes") {
  auto res = kernelize(cycle_graph(5), 3);
  auto text = kernel_result_json(res);
  CHECK(text.find("\"outcome\":\"kernel\"") != std::string::npos);
  auto yes = kernelize(path_graph(5), 2);
  CHECK(kernel_result_json(yes).find("\"outcome\":\"yes\"") != std::string::npos);
}
