#include "rainbowkit/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "rainbowkit/reductions.hpp"
#include "rainbowkit/solver.hpp"

namespace rainbow::oracle {

namespace {

SolveLimits wide_limits() {
  SolveLimits lim;
  lim.max_edges = 1 << 20;
  return lim;
}

// Any simple path from x to v whose colors stay pairwise distinct?
bool path_dfs(const Graph& g, const EdgeColoring& c, int x, int v, bool follow_arcs,
              std::vector<char>& on_path, std::vector<char>& used_color,
              bool geodesic_only, const std::vector<int>& dist_to) {
  if (x == v) return true;
  const auto& next = follow_arcs ? g.out_neighbors(x) : g.neighbors(x);
  for (int w : next) {
    if (on_path[w]) continue;
    if (geodesic_only && (dist_to[w] < 0 || dist_to[w] != dist_to[x] - 1)) continue;
    int col = c.color_at(g.edge_index(follow_arcs ? x : std::min(x, w),
                                      follow_arcs ? w : std::max(x, w)));
    if (used_color[col]) continue;
    on_path[w] = 1;
    used_color[col] = 1;
    bool found = path_dfs(g, c, w, v, follow_arcs, on_path, used_color,
                          geodesic_only, dist_to);
    used_color[col] = 0;
    on_path[w] = 0;
    if (found) return true;
  }
  return false;
}

bool directed_rainbow_one_way(const Graph& g, const EdgeColoring& c, int u, int v) {
  std::vector<char> on_path(g.vertex_count(), 0), used(c.k(), 0);
  on_path[u] = 1;
  std::vector<int> none;
  return path_dfs(g, c, u, v, true, on_path, used, false, none);
}

}  // namespace

bool chromatic_number_at_most(const Graph& g, int k) {
  if (g.is_directed())
    throw std::invalid_argument("vertex coloring oracle takes an undirected graph");
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    int cap = 0;
    for (int u = 0; u < v; ++u) cap = std::max(cap, color[u] + 1);
    cap = std::min(cap, k - 1);
    for (int c = 0; c <= cap; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

bool cnf_satisfiable(const CnfFormula& f) {
  if (f.num_vars() > 24)
    throw std::invalid_argument("satisfiability oracle is capped at 24 variables");
  std::uint32_t limit = std::uint32_t{1} << f.num_vars();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses()) {
      bool sat = false;
      for (int lit : clause) {
        int var = std::abs(lit) - 1;
        bool value = (mask >> var) & 1;
        if ((lit > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool rainbow_path_bruteforce(const Graph& g, const EdgeColoring& c, int u, int v,
                             VerifyMode mode) {
  if (u == v) throw std::invalid_argument("pair (v,v) rejected");
  std::vector<char> on_path(g.vertex_count(), 0), used(c.k(), 0);
  if (mode == VerifyMode::directed)
    return directed_rainbow_one_way(g, c, u, v) || directed_rainbow_one_way(g, c, v, u);
  on_path[u] = 1;
  if (mode == VerifyMode::geodesic) {
    auto dist_to = bfs_distances(g, v);
    if (dist_to[u] < 0) return false;
    return path_dfs(g, c, u, v, false, on_path, used, true, dist_to);
  }
  std::vector<int> none;
  return path_dfs(g, c, u, v, false, on_path, used, false, none);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("exhaustive graph enumeration is capped at n <= 6");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    Graph g = Graph::undirected(n, std::move(edges));
    if (connectivity_check(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_connected_graph(std::mt19937& rng, int n, double extra_edge_prob) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back({order[pick(rng)], order[i]});
  }
  Graph tree = Graph::undirected(n, edges);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.has_edge(u, v) && coin(rng) < extra_edge_prob)
        edges.push_back({u, v});
  return Graph::undirected(n, std::move(edges));
}

Graph random_connected_digraph(std::mt19937& rng, int n, double extra_arc_prob) {
  // A random spine keeps the graph connected in the directed sense; extra
  // arcs are sprinkled on top.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> arcs;
  for (int i = 1; i < n; ++i) arcs.push_back({order[i - 1], order[i]});
  Graph spine = Graph::directed(n, arcs);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !spine.has_edge(u, v) && coin(rng) < extra_arc_prob)
        arcs.push_back({u, v});
  return Graph::directed(n, std::move(arcs));
}

PairSet random_pair_subset(std::mt19937& rng, int n, double keep_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < keep_prob) pairs.push_back({u, v});
  return PairSet(std::move(pairs));
}

CnfFormula random_cnf(std::mt19937& rng, int max_vars, int max_clauses) {
  std::uniform_int_distribution<int> nvd(1, max_vars);
  std::uniform_int_distribution<int> ncd(1, max_clauses);
  int nv = nvd(rng);
  int nc = ncd(rng);
  std::vector<std::vector<int>> clauses;
  std::uniform_int_distribution<int> sized(1, std::min(3, nv));
  std::uniform_int_distribution<int> coin(0, 1);
  for (int j = 0; j < nc; ++j) {
    int size = sized(rng);
    std::vector<int> vars(nv);
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> clause;
    for (int t = 0; t < size; ++t)
      clause.push_back(coin(rng) ? vars[t] : -vars[t]);
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(nv, std::move(clauses));
}

EquivStats equiv_vc_to_subset_src(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  EquivStats stats;
  std::uniform_int_distribution<int> nd(2, 5);
  std::uniform_int_distribution<int> kd(3, 4);
  for (int t = 0; t < trials; ++t) {
    int n = nd(rng);
    Graph g = random_connected_graph(rng, n, 0.5);
    int k = kd(rng);
    auto red = reduce_vc_to_subset_src(g, k);
    bool chromatic = chromatic_number_at_most(g, k);
    bool geodesic =
        decide_subset_rc(red.graph, *red.pairs, k, VerifyMode::geodesic, wide_limits())
            .has_value();
    bool plain =
        decide_subset_rc(red.graph, *red.pairs, k, VerifyMode::plain, wide_limits())
            .has_value();
    ++stats.trials;
    if (chromatic != geodesic || chromatic != plain) {
      ++stats.mismatches;
      stats.notes.push_back("trial " + std::to_string(t) + ": chi<=" +
                            std::to_string(k) + " is " + std::to_string(chromatic) +
                            " but target says " + std::to_string(geodesic) + "/" +
                            std::to_string(plain));
    }
  }
  return stats;
}

EquivStats equiv_subset_src_to_src(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  EquivStats stats;
  std::uniform_int_distribution<int> leaves_d(1, 4);
  constexpr int k = 3;
  for (int t = 0; t < trials; ++t) {
    int leaves = leaves_d(rng);
    std::vector<Edge> spokes;
    for (int v = 0; v < leaves; ++v) spokes.push_back({v, leaves});
    Graph star = Graph::undirected(leaves + 1, std::move(spokes));
    PairSet p = random_pair_subset(rng, leaves, 0.6);
    auto red = reduce_subset_src_to_src(star, p, k);
    bool source_yes =
        decide_subset_rc(star, p, k, VerifyMode::geodesic, wide_limits()).has_value();
    bool target_yes = src_exact(red.graph, wide_limits()).value <= k;
    bool bipartite = chromatic_number_at_most(red.graph, 2);
    ++stats.trials;
    if (source_yes != target_yes || !bipartite) {
      ++stats.mismatches;
      stats.notes.push_back("trial " + std::to_string(t) + ": source " +
                            std::to_string(source_yes) + " target " +
                            std::to_string(target_yes) +
                            (bipartite ? "" : " (target not bipartite)"));
    }
  }
  return stats;
}

EquivStats equiv_subset_rc_to_rc(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  EquivStats stats;
  std::uniform_int_distribution<int> nd(2, 3);
  constexpr int k = 3;
  for (int t = 0; t < trials; ++t) {
    int n = nd(rng);
    Graph g = random_connected_graph(rng, n, 0.6);
    PairSet p = random_pair_subset(rng, n, 0.6);
    auto red = reduce_subset_rc_to_rc_odd(g, p, GadgetParams::for_odd_k(k));
    auto source = decide_subset_rc(g, p, k, VerifyMode::plain, wide_limits());
    bool target_yes = rc_exact(red.graph, wide_limits()).value <= k;
    ++stats.trials;
    if (source.has_value() != target_yes) {
      ++stats.mismatches;
      stats.notes.push_back("trial " + std::to_string(t) + ": source " +
                            std::to_string(source.has_value()) + " target " +
                            std::to_string(target_yes));
      continue;
    }
    if (source) extend_rc_coloring_odd(red, *source);  // throws unless certified
  }
  return stats;
}

EquivStats equiv_sat_to_dir_subset(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  EquivStats stats;
  for (int t = 0; t < trials; ++t) {
    CnfFormula f = random_cnf(rng, 3, 3);
    auto red = reduce_3sat_to_dir_subset_rc2(f);
    bool sat = cnf_satisfiable(f);
    bool target_yes =
        decide_subset_rc(red.graph, *red.pairs, 2, VerifyMode::directed, wide_limits())
            .has_value();
    ++stats.trials;
    if (sat != target_yes) {
      ++stats.mismatches;
      stats.notes.push_back("trial " + std::to_string(t) + ": sat " +
                            std::to_string(sat) + " target " +
                            std::to_string(target_yes));
    }
  }
  return stats;
}

EquivStats equiv_dir_subset_to_dir_rc2(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  EquivStats stats;
  std::uniform_int_distribution<int> nd(2, 4);
  for (int t = 0; t < trials; ++t) {
    int n = nd(rng);
    Graph g = random_connected_digraph(rng, n, 0.4);
    PairSet p = random_pair_subset(rng, n, 0.5);
    // Drop pairs with no connecting path in either direction.
    std::vector<Edge> usable;
    for (const auto& [u, v] : p.pairs()) {
      if (bfs_distances(g, u)[v] >= 0 || bfs_distances(g, v)[u] >= 0)
        usable.push_back({u, v});
    }
    p = PairSet(std::move(usable));
    auto red = reduce_dir_subset_to_dir_rc2(g, p);
    auto source = decide_subset_rc(g, p, 2, VerifyMode::directed, wide_limits());
    bool target_yes =
        decide_subset_rc(red.graph, PairSet::all_pairs(red.graph.vertex_count()), 2,
                         VerifyMode::directed, wide_limits())
            .has_value();
    ++stats.trials;
    if (source.has_value() != target_yes) {
      ++stats.mismatches;
      stats.notes.push_back("trial " + std::to_string(t) + ": source " +
                            std::to_string(source.has_value()) + " target " +
                            std::to_string(target_yes));
      continue;
    }
    if (source) extend_dir_rc2_coloring(red, *source);  // throws unless certified
  }
  return stats;
}

}  // namespace rainbow::oracle
