#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rainbowkit/io.hpp"
#include "rainbowkit/oracles.hpp"
#include "rainbowkit/reductions.hpp"
#include "rainbowkit/solver.hpp"
#include "rainbowkit/verify.hpp"
#include "support/builders.hpp"

using namespace rainbow;
using namespace rainbow::testing;

namespace {

SolveLimits wide() {
  SolveLimits lim;
  lim.max_edges = 100000;
  return lim;
}

// Lengths of simple u-v paths that visit at least one vertex outside the
// first core_size vertices.
void gadget_path_lengths(const Graph& g, int v, std::vector<int>& lengths,
                         std::vector<char>& on_path, int x, int depth,
                         bool left_core, int core_size) {
  if (x == v) {
    if (left_core) lengths.push_back(depth);
    return;
  }
  for (int w : g.neighbors(x)) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    gadget_path_lengths(g, v, lengths, on_path, w, depth + 1,
                        left_core || w >= core_size, core_size);
    on_path[w] = 0;
  }
}

}  // namespace

TEST_CASE("vertex coloring reduction builds the expected star") {
  auto red = reduce_vc_to_subset_src(complete_graph(3), 3);
  CHECK(red.graph.vertex_count() == 4);
  CHECK(red.graph.edge_count() == 3);
  CHECK(red.pairs->size() == 3);
  CHECK(red.provenance == std::vector<std::string>{"v(0)", "v(1)", "v(2)", "a"});

  auto k2 = reduce_vc_to_subset_src(Graph::undirected(2, {{0, 1}}), 3);
  CHECK(k2.graph.vertex_count() == 3);
  CHECK(k2.pairs->size() == 1);

  CHECK_THROWS_AS(reduce_vc_to_subset_src(complete_graph(3), 2),
                  std::invalid_argument);
}

TEST_CASE("vertex coloring equivalence on the triangle") {
  auto red = reduce_vc_to_subset_src(complete_graph(3), 3);
  CHECK(decide_subset_rc(red.graph, *red.pairs, 3, VerifyMode::geodesic).has_value());
  CHECK_FALSE(
      decide_subset_rc(red.graph, *red.pairs, 2, VerifyMode::geodesic).has_value());
}

TEST_CASE("star coloring decodes back to a proper vertex coloring") {
  Graph g = complete_graph(3);
  auto red = reduce_vc_to_subset_src(g, 3);
  auto witness = decide_subset_rc(red.graph, *red.pairs, 3, VerifyMode::geodesic);
  REQUIRE(witness.has_value());
  auto vertex_colors = decode_star_coloring(red, *witness);
  for (const auto& [u, v] : g.edges()) CHECK(vertex_colors[u] != vertex_colors[v]);
}

TEST_CASE("star-to-src gadget sizes match the construction") {
  Graph star = star_graph(3);
  auto full = reduce_subset_src_to_src(star, PairSet::all_pairs(3), 3);
  CHECK(full.graph.vertex_count() == 10);
  CHECK(full.graph.edge_count() == 18);

  auto partial = reduce_subset_src_to_src(star, PairSet({{0, 1}, {0, 2}}), 3);
  CHECK(partial.graph.vertex_count() == 12);

  CHECK_THROWS_AS(reduce_subset_src_to_src(path_graph(4), PairSet(), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(reduce_subset_src_to_src(star, PairSet({{0, 3}}), 3),
                  std::invalid_argument);
}

TEST_CASE("star-to-src output is bipartite") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int leaves = 1 + static_cast<int>(rng() % 4);
    auto red = reduce_subset_src_to_src(
        star_graph(leaves), oracle::random_pair_subset(rng, leaves, 0.5), 3);
    CHECK(oracle::chromatic_number_at_most(red.graph, 2));
  }
}

TEST_CASE("src coloring extension is certified, and covers rc at k = 3") {
  Graph star = star_graph(3);
  PairSet p = PairSet::all_pairs(3);
  auto red = reduce_subset_src_to_src(star, p, 3);
  auto source = decide_subset_rc(star, p, 3, VerifyMode::geodesic);
  REQUIRE(source.has_value());
  auto chi = extend_src_coloring(red, *source);  // certifies geodesically inside
  CHECK(chi.k() == 3);
  // The same coloring also rainbow-connects the target in the plain sense.
  CHECK(verify_pairs(red.graph, chi, PairSet::all_pairs(red.graph.vertex_count()),
                     VerifyMode::plain)
            .unsatisfied.empty());

  // Rejects a source coloring that breaks its pairs.
  auto bad = EdgeColoring(star, {0, 0, 0}, 3);
  CHECK_THROWS_AS(extend_src_coloring(red, bad), std::invalid_argument);
}

TEST_CASE("composed size formula") {
  CHECK(composed_size_check(3, 3) == 10);
  CHECK(composed_size_check(3, 3) <= 18);
  CHECK(composed_size_check(4, 0) == 25);
  for (int n = 3; n <= 8; ++n) {
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    for (long long p = 0; p <= pairs; ++p)
      CHECK(composed_size_check(n, p) <= 2LL * n * n);
  }
}

TEST_CASE("composed size formula equals the built graph") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_connected_graph(rng, n, 0.4);
    auto star = reduce_vc_to_subset_src(g, 3);
    auto target = reduce_subset_src_to_src(star.graph, *star.pairs, 3);
    CHECK(target.graph.vertex_count() ==
          composed_size_check(n, star.pairs->size()));
  }
}

TEST_CASE("odd-k gadget sizes") {
  Graph k2 = Graph::undirected(2, {{0, 1}});
  PairSet p({{0, 1}});
  auto g3 = reduce_subset_rc_to_rc_odd(k2, p, GadgetParams::for_odd_k(3));
  CHECK(g3.graph.vertex_count() == 8);
  auto g5 = reduce_subset_rc_to_rc_odd(k2, p, GadgetParams::for_odd_k(5));
  CHECK(g5.graph.vertex_count() == 12);
  CHECK_THROWS_AS(GadgetParams::for_odd_k(4), std::invalid_argument);
  CHECK_THROWS_AS(GadgetParams::for_odd_k(1), std::invalid_argument);
}

TEST_CASE("odd-k gadget: paths leaving the source are longer than k") {
  // On the k=3 instance from a single edge, every 0-1 path through gadget
  // vertices has length at least k + 1, so a short rainbow path must stay
  // inside the source graph.
  Graph k2 = Graph::undirected(2, {{0, 1}});
  PairSet p({{0, 1}});
  auto red = reduce_subset_rc_to_rc_odd(k2, p, GadgetParams::for_odd_k(3));
  std::vector<int> lengths;
  std::vector<char> on_path(red.graph.vertex_count(), 0);
  on_path[0] = 1;
  gadget_path_lengths(red.graph, 1, lengths, on_path, 0, 0, false, 2);
  CHECK_FALSE(lengths.empty());
  for (int len : lengths) CHECK(len >= 4);
}

TEST_CASE("odd-k coloring extension is certified") {
  Graph k2 = Graph::undirected(2, {{0, 1}});
  PairSet p({{0, 1}});

  auto red3 = reduce_subset_rc_to_rc_odd(k2, p, GadgetParams::for_odd_k(3));
  auto src3 = decide_subset_rc(k2, p, 3, VerifyMode::plain);
  REQUIRE(src3.has_value());
  auto chi3 = extend_rc_coloring_odd(red3, *src3);
  CHECK(verify_pairs(red3.graph, chi3, PairSet::all_pairs(8), VerifyMode::plain)
            .count_satisfied == 28);
  // m = 1 folds both ring edges into one, colored c_1.
  int u01 = 2, u02 = 3;  // u(0,1), u(0,2) in the layout
  CHECK(chi3.color_of(u01, u02) == 0);

  auto red5 = reduce_subset_rc_to_rc_odd(k2, p, GadgetParams::for_odd_k(5));
  auto src5 = decide_subset_rc(k2, p, 5, VerifyMode::plain);
  REQUIRE(src5.has_value());
  CHECK_NOTHROW(extend_rc_coloring_odd(red5, *src5));

  // k = 5 with a 4-vertex source.
  std::mt19937 rng(7);
  Graph g4 = oracle::random_connected_graph(rng, 4, 0.5);
  PairSet p4 = oracle::random_pair_subset(rng, 4, 0.5);
  auto red45 = reduce_subset_rc_to_rc_odd(g4, p4, GadgetParams::for_odd_k(5));
  auto src45 = decide_subset_rc(g4, p4, 5, VerifyMode::plain, wide());
  REQUIRE(src45.has_value());
  CHECK_NOTHROW(extend_rc_coloring_odd(red45, *src45));
}

TEST_CASE("3sat reduction counts") {
  CnfFormula f(3, {{1, 2, -3}});
  auto red = reduce_3sat_to_dir_subset_rc2(f);
  CHECK(red.graph.vertex_count() == 10);
  CHECK(red.pairs->size() == 14);
  CHECK(red.graph.is_directed());
}

TEST_CASE("3sat reduction decides satisfiability") {
  CnfFormula sat(2, {{1, 2}, {-1, 2}});
  auto red_sat = reduce_3sat_to_dir_subset_rc2(sat);
  CHECK(decide_subset_rc(red_sat.graph, *red_sat.pairs, 2, VerifyMode::directed,
                         wide())
            .has_value());

  CnfFormula unsat(1, {{1}, {-1}});
  auto red_unsat = reduce_3sat_to_dir_subset_rc2(unsat);
  CHECK_FALSE(decide_subset_rc(red_unsat.graph, *red_unsat.pairs, 2,
                               VerifyMode::directed, wide())
                  .has_value());
}

TEST_CASE("directed rc2 gadget structure") {
  Graph p3 = Graph::directed(3, {{0, 1}, {1, 2}});
  PairSet p({{0, 2}});
  auto red = reduce_dir_subset_to_dir_rc2(p3, p);
  // Ordered distinct pairs minus both orders of the one excluded pair.
  CHECK(red.graph.vertex_count() == 3 + (6 - 2) + 1);

  // No length <= 2 directed path between the pair's endpoints leaves the
  // source graph.
  const Graph& t = red.graph;
  for (int mid = 0; mid < t.vertex_count(); ++mid) {
    if (mid < 3) continue;
    CHECK_FALSE((t.has_edge(0, mid) && t.has_edge(mid, 2)));
    CHECK_FALSE((t.has_edge(2, mid) && t.has_edge(mid, 0)));
  }
  CHECK_FALSE(t.has_edge(0, 2));
  CHECK_FALSE(t.has_edge(2, 0));

  // Deterministic: rebuilt output serializes identically.
  auto again = reduce_dir_subset_to_dir_rc2(p3, p);
  CHECK(serialize_graph(red.graph) == serialize_graph(again.graph));
  CHECK(red.provenance == again.provenance);
}

TEST_CASE("directed rc2 forward certificate is certified") {
  Graph p3 = Graph::directed(3, {{0, 1}, {1, 2}});
  PairSet p({{0, 2}});
  auto red = reduce_dir_subset_to_dir_rc2(p3, p);
  auto source = decide_subset_rc(p3, p, 2, VerifyMode::directed);
  REQUIRE(source.has_value());
  CHECK_NOTHROW(extend_dir_rc2_coloring(red, *source));
}

TEST_CASE("all reductions are deterministic with total, injective provenance") {
  std::mt19937 rng(11);
  auto audit = [](const ReductionOutput& a, const ReductionOutput& b) {
    CHECK(serialize_graph(a.graph) == serialize_graph(b.graph));
    CHECK(a.provenance == b.provenance);
    CHECK(static_cast<int>(a.provenance.size()) == a.graph.vertex_count());
    std::set<std::string> tags(a.provenance.begin(), a.provenance.end());
    CHECK(tags.size() == a.provenance.size());
    if (a.pairs) CHECK(a.pairs->pairs() == b.pairs->pairs());
  };
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_connected_graph(rng, n, 0.5);
    PairSet p = oracle::random_pair_subset(rng, n, 0.5);
    audit(reduce_vc_to_subset_src(g, 3), reduce_vc_to_subset_src(g, 3));
    Graph st = star_graph(n);
    PairSet leaf_pairs = oracle::random_pair_subset(rng, n, 0.5);
    audit(reduce_subset_src_to_src(st, leaf_pairs, 3),
          reduce_subset_src_to_src(st, leaf_pairs, 3));
    audit(reduce_subset_rc_to_rc_odd(g, p, GadgetParams::for_odd_k(3)),
          reduce_subset_rc_to_rc_odd(g, p, GadgetParams::for_odd_k(3)));
    CnfFormula f = oracle::random_cnf(rng, 3, 3);
    audit(reduce_3sat_to_dir_subset_rc2(f), reduce_3sat_to_dir_subset_rc2(f));
    Graph dg = oracle::random_connected_digraph(rng, n, 0.5);
    audit(reduce_dir_subset_to_dir_rc2(dg, p),
          reduce_dir_subset_to_dir_rc2(dg, p));
  }
}

TEST_CASE("small-instance oracle equivalence per reduction") {
  CHECK(oracle::equiv_vc_to_subset_src(25, 101).mismatches == 0);
  CHECK(oracle::equiv_subset_src_to_src(25, 102).mismatches == 0);
  CHECK(oracle::equiv_subset_rc_to_rc(25, 103).mismatches == 0);
  CHECK(oracle::equiv_sat_to_dir_subset(25, 104).mismatches == 0);
  CHECK(oracle::equiv_dir_subset_to_dir_rc2(25, 105).mismatches == 0);
}

namespace {

std::vector<PairSet> all_pair_subsets(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<PairSet> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> pairs;
    for (size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) pairs.push_back(slots[i]);
    out.push_back(PairSet(std::move(pairs)));
  }
  return out;
}

}  // namespace

TEST_CASE("star-to-src equivalence, exhaustive over pair subsets") {
  for (int leaves = 1; leaves <= 4; ++leaves) {
    Graph st = star_graph(leaves);
    for (const auto& p : all_pair_subsets(leaves))
      for (int k = 3; k <= 4; ++k) {
        auto red = reduce_subset_src_to_src(st, p, k);
        auto source = decide_subset_rc(st, p, k, VerifyMode::geodesic, wide());
        CHECK(source.has_value() == (src_exact(red.graph, wide()).value <= k));
        if (source) CHECK_NOTHROW(extend_src_coloring(red, *source));
      }
  }
}

TEST_CASE("odd-k equivalence, exhaustive over 3-vertex sources") {
  for (const Graph& g : oracle::enumerate_connected_graphs(3))
    for (const auto& p : all_pair_subsets(3)) {
      auto red = reduce_subset_rc_to_rc_odd(g, p, GadgetParams::for_odd_k(3));
      auto source = decide_subset_rc(g, p, 3, VerifyMode::plain, wide());
      CHECK(source.has_value() == (rc_exact(red.graph, wide()).value <= 3));
      if (source) CHECK_NOTHROW(extend_rc_coloring_odd(red, *source));
    }
}

TEST_CASE("directed gadget equivalence, exhaustive over 3-vertex digraphs") {
  std::vector<Edge> slots = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Edge> arcs;
    for (size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) arcs.push_back(slots[i]);
    Graph g = Graph::directed(3, arcs);
    for (const auto& p_raw : all_pair_subsets(3)) {
      std::vector<Edge> usable;
      for (const auto& [u, v] : p_raw.pairs())
        if (bfs_distances(g, u)[v] >= 0 || bfs_distances(g, v)[u] >= 0)
          usable.push_back({u, v});
      PairSet p(std::move(usable));
      auto red = reduce_dir_subset_to_dir_rc2(g, p);
      auto source = decide_subset_rc(g, p, 2, VerifyMode::directed, wide());
      bool target =
          decide_subset_rc(red.graph, PairSet::all_pairs(red.graph.vertex_count()),
                           2, VerifyMode::directed, wide())
              .has_value();
      CHECK(source.has_value() == target);
      if (source) CHECK_NOTHROW(extend_dir_rc2_coloring(red, *source));
    }
  }
}

TEST_CASE("formula chain, exhaustive over 2-variable 2-clause formulas") {
  std::vector<std::vector<int>> clauses;
  for (int lit : {1, -1, 2, -2}) clauses.push_back({lit});
  for (int a : {1, -1})
    for (int b : {2, -2}) clauses.push_back({a, b});
  for (const auto& c1 : clauses)
    for (const auto& c2 : clauses) {
      CnfFormula f(2, {c1, c2});
      bool sat = oracle::cnf_satisfiable(f);
      auto red = reduce_3sat_to_dir_subset_rc2(f);
      CHECK(sat == decide_subset_rc(red.graph, *red.pairs, 2, VerifyMode::directed,
                                    wide())
                       .has_value());
      auto comp = reduce_dir_subset_to_dir_rc2(red.graph, *red.pairs);
      CHECK(sat ==
            decide_subset_rc(comp.graph,
                             PairSet::all_pairs(comp.graph.vertex_count()), 2,
                             VerifyMode::directed, wide())
                .has_value());
    }
}
