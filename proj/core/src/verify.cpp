#include "rainbowkit/verify.hpp"

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace rainbow {

namespace {

void check_inputs(const Graph& g, const EdgeColoring& c, int u, int v) {
  if (!c.matches(g))
    throw std::invalid_argument("coloring does not match the graph shape");
  if (c.k() > kColorCap)
    throw std::invalid_argument("color cap exceeded: k = " + std::to_string(c.k()) +
                                " > " + std::to_string(kColorCap));
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range in pair");
  if (u == v) throw std::invalid_argument("pair (v,v) rejected");
}

// BFS over (vertex, color-subset) states from `from` toward `to`.
// `allowed` filters edges; it receives (x, w, edge_index) for a step from
// x to w.
template <typename EdgeFilter>
bool state_search(const Graph& g, const EdgeColoring& c, int from, int to,
                  bool follow_arcs, EdgeFilter allowed) {
  std::vector<std::unordered_set<std::uint32_t>> seen(g.vertex_count());
  std::queue<std::pair<int, std::uint32_t>> q;
  q.push({from, 0});
  seen[from].insert(0);
  while (!q.empty()) {
    auto [x, mask] = q.front();
    q.pop();
    const auto& next =
        follow_arcs ? g.out_neighbors(x) : g.neighbors(x);
    for (int w : next) {
      int ei = g.edge_index(follow_arcs ? x : std::min(x, w),
                            follow_arcs ? w : std::max(x, w));
      if (!allowed(x, w, ei)) continue;
      std::uint32_t bit = std::uint32_t{1} << c.color_at(ei);
      if (mask & bit) continue;
      if (w == to) return true;
      std::uint32_t nm = mask | bit;
      if (seen[w].insert(nm).second) q.push({w, nm});
    }
  }
  return false;
}

bool all_edges(int, int, int) { return true; }

}  // namespace

bool rainbow_path_exists(const Graph& g, const EdgeColoring& c, int u, int v) {
  check_inputs(g, c, u, v);
  if (!g.is_directed()) return state_search(g, c, u, v, false, all_edges);
  return state_search(g, c, u, v, true, all_edges) ||
         state_search(g, c, v, u, true, all_edges);
}

static bool geodesic_with_dists(const Graph& g, const EdgeColoring& c, int u, int v,
                                const std::vector<int>& du,
                                const std::vector<int>& dv) {
  int dist = du[v];
  if (dist < 0) return false;
  // Keep only edges that advance along some shortest u-v path.
  auto on_dag = [&](int x, int w, int) {
    return du[x] + 1 == du[w] && du[w] + dv[w] == dist;
  };
  return state_search(g, c, u, v, false, on_dag);
}

bool geodesic_rainbow_exists(const Graph& g, const EdgeColoring& c, int u, int v) {
  check_inputs(g, c, u, v);
  if (g.is_directed())
    throw std::invalid_argument("geodesic verification requires an undirected graph");
  return geodesic_with_dists(g, c, u, v, bfs_distances(g, u), bfs_distances(g, v));
}

VerifyReport verify_pairs(const Graph& g, const EdgeColoring& c, const PairSet& p,
                          VerifyMode mode) {
  if (mode == VerifyMode::directed && !g.is_directed())
    throw std::invalid_argument("directed mode requires a directed graph");
  if (mode != VerifyMode::directed && g.is_directed())
    throw std::invalid_argument("plain/geodesic modes require an undirected graph");

  // Distance rows are shared across the whole pair batch in geodesic mode.
  std::vector<std::vector<int>> dist;
  if (mode == VerifyMode::geodesic) {
    dist.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dist[v] = bfs_distances(g, v);
  }

  std::vector<Edge> sat, unsat;
  for (const auto& [u, v] : p.pairs()) {
    bool ok;
    if (mode == VerifyMode::geodesic) {
      check_inputs(g, c, u, v);
      ok = geodesic_with_dists(g, c, u, v, dist[u], dist[v]);
    } else {
      ok = rainbow_path_exists(g, c, u, v);
    }
    (ok ? sat : unsat).push_back({u, v});
  }
  VerifyReport report;
  report.satisfied = PairSet(std::move(sat));
  report.unsatisfied = PairSet(std::move(unsat));
  report.count_satisfied = report.satisfied.size();
  return report;
}

}  // namespace rainbow
