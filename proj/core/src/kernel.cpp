#include "rainbowkit/kernel.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "rainbowkit/verify.hpp"

namespace rainbow {

namespace {

void require_connected_undirected(const Graph& g, const char* what) {
  if (g.is_directed())
    throw std::invalid_argument(std::string(what) + " takes an undirected graph");
  if (!connectivity_check(g))
    throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

// Satisfied anti-edge pairs under a 2-coloring; adjacent pairs are always
// satisfied, so |E| + this is the full satisfied count.
int satisfied_anti_pairs(const Graph& g, const EdgeColoring& chi) {
  return verify_pairs(g, chi, anti_edges(g), VerifyMode::plain).count_satisfied;
}

std::vector<int> non_neighbors(const Graph& g, int v) {
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v && !g.has_edge(u, v)) out.push_back(u);
  return out;
}

// Components of H = complement of G[N(v)], as sorted vertex lists in
// ascending order of their minimum element.
std::vector<std::vector<int>> complement_components(const Graph& g,
                                                    const std::vector<int>& nv) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int seed : nv) {
    if (seen[seed]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(seed);
    seen[seed] = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      comp.push_back(a);
      for (int b : nv) {
        if (seen[b] || b == a || g.has_edge(a, b)) continue;
        seen[b] = 1;
        q.push(b);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

long long anti_edge_count(const Graph& g) {
  long long n = g.vertex_count();
  return n * (n - 1) / 2 - g.edge_count();
}

}  // namespace

EdgeColoring bfs_layer_coloring(const Graph& g, int v) {
  require_connected_undirected(g, "bfs_layer_coloring()");
  auto dist = bfs_distances(g, v);
  std::vector<int> colors(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    int lo = std::min(dist[a], dist[b]);
    int hi = std::max(dist[a], dist[b]);
    // Layer-crossing edges alternate; the deeper layer's parity decides.
    if (hi == lo + 1) colors[e] = hi % 2 == 1 ? 1 : 0;
  }
  EdgeColoring chi(g, std::move(colors), 2);
  int expected = g.vertex_count() - 1 - g.degree(v);
  if (satisfied_anti_pairs(g, chi) < expected)
    throw std::logic_error("bfs layer coloring fell short of |O_v| pairs");
  return chi;
}

EdgeColoring component_coloring(const Graph& g, int v) {
  require_connected_undirected(g, "component_coloring()");
  const auto& nv = g.neighbors(v);
  auto comps = complement_components(g, nv);

  std::vector<int> colors(g.edge_count(), 0);
  int expected = 0;
  for (const auto& comp : comps) {
    expected += static_cast<int>(comp.size()) - 1;
    if (comp.size() < 2) continue;
    // BFS spanning tree of the component inside H; vertex colors alternate
    // by level and transfer to the spokes at v.
    std::vector<int> depth(g.vertex_count(), -1);
    std::queue<int> q;
    q.push(comp[0]);
    depth[comp[0]] = 0;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      colors[g.edge_index(v, a)] = depth[a] % 2;
      for (int b : comp) {
        if (depth[b] >= 0 || b == a || g.has_edge(a, b)) continue;
        depth[b] = depth[a] + 1;
        q.push(b);
      }
    }
  }
  EdgeColoring chi(g, std::move(colors), 2);
  if (satisfied_anti_pairs(g, chi) < expected)
    throw std::logic_error("component coloring fell short of sum |C_i| - r pairs");
  return chi;
}

std::vector<int> greedy_extend_clique(const Graph& g, std::vector<int> clique) {
  std::sort(clique.begin(), clique.end());
  for (size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] < 0 || clique[i] >= g.vertex_count())
      throw std::invalid_argument("clique vertex out of range");
    if (i > 0 && clique[i] == clique[i - 1])
      throw std::invalid_argument("duplicate clique vertex");
    for (size_t j = i + 1; j < clique.size(); ++j)
      if (!g.has_edge(clique[i], clique[j]))
        throw std::invalid_argument("seed set is not a clique");
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (std::binary_search(clique.begin(), clique.end(), u)) continue;
    bool adjacent_to_all = true;
    for (int w : clique)
      if (!g.has_edge(u, w)) {
        adjacent_to_all = false;
        break;
      }
    if (adjacent_to_all) {
      clique.insert(std::lower_bound(clique.begin(), clique.end(), u), u);
    }
  }
  return clique;
}

EdgeColoring clique_coloring(const Graph& g, const std::vector<int>& clique, int k,
                             CliqueColoringInfo* info) {
  require_connected_undirected(g, "clique_coloring()");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<int> m_sorted = clique;
  std::sort(m_sorted.begin(), m_sorted.end());
  for (size_t i = 0; i < m_sorted.size(); ++i)
    for (size_t j = i + 1; j < m_sorted.size(); ++j)
      if (m_sorted[i] == m_sorted[j] || !g.has_edge(m_sorted[i], m_sorted[j]))
        throw std::invalid_argument("M is not a clique");
  if (static_cast<int>(m_sorted.size()) < k)
    throw std::invalid_argument("clique smaller than k");
  if (anti_edge_count(g) < k)
    throw std::invalid_argument("graph has fewer than k anti-edges");

  int n = g.vertex_count();
  std::vector<char> in_m(n, 0);
  for (int w : m_sorted) in_m[w] = 1;
  // Multi-source BFS distance from the clique.
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  for (int w : m_sorted) {
    dist[w] = 0;
    q.push(w);
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a))
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
  }

  CliqueColoringInfo local;
  std::vector<int> colors(g.edge_count(), -1);
  auto set = [&](int a, int b, int c) { colors[g.edge_index(a, b)] = c; };
  bool l2_nonempty = false;
  for (int v = 0; v < n; ++v) l2_nonempty |= dist[v] >= 2;

  if (l2_nonempty) {
    // Clique red, M->L1 blue, L1->L2 red: every L2 vertex pairs its L1
    // neighbor against the clique across a bicolored wedge.
    local.case_id = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edge(e);
      if (in_m[a] != in_m[b] && (dist[a] == 1 || dist[b] == 1)) colors[e] = 1;
      if ((dist[a] == 1 && dist[b] == 2) || (dist[a] == 2 && dist[b] == 1))
        colors[e] = 0;
    }
  } else {
    std::vector<int> l1;
    for (int v = 0; v < n; ++v)
      if (dist[v] == 1) l1.push_back(v);
    int anti_m_l1 = 0;
    for (int w : m_sorted)
      for (int u : l1)
        if (!g.has_edge(w, u)) ++anti_m_l1;
    if (anti_m_l1 >= k) {
      local.case_id = 2;
      for (int w : m_sorted)
        for (int u : l1)
          if (g.has_edge(w, u)) set(w, u, 1);
    } else {
      // Greedy marking loop over anti-edges inside L1: each processed
      // anti-edge (u,v) claims a fresh common clique neighbor w and gets a
      // red/blue wedge through it.
      local.case_id = 3;
      std::vector<Edge> s;
      for (size_t i = 0; i < l1.size(); ++i)
        for (size_t j = i + 1; j < l1.size(); ++j)
          if (!g.has_edge(l1[i], l1[j])) s.push_back({l1[i], l1[j]});
      std::vector<char> marked(n, 0);
      bool progress = true;
      while (progress && !s.empty()) {
        progress = false;
        for (size_t t = 0; t < s.size(); ++t) {
          auto [u, v] = s[t];
          int w = -1;
          for (int cand : m_sorted)
            if (!marked[cand] && g.has_edge(u, cand) && g.has_edge(v, cand)) {
              w = cand;
              break;
            }
          if (w < 0) continue;
          set(u, w, 0);
          set(v, w, 1);
          marked[w] = 1;
          s.erase(s.begin() + t);
          ++local.loop_iterations;
          progress = true;
          break;
        }
      }
      // Uncolored M-L1 edges turn blue.
      for (int w : m_sorted)
        for (int u : l1)
          if (g.has_edge(w, u) && colors[g.edge_index(w, u)] < 0) set(w, u, 1);
      // A vertex left with all-red clique edges trades part of the clique
      // to blue to reclaim its non-neighbors.
      for (int u : l1) {
        bool all_red = true;
        int w0 = -1;
        for (int w : m_sorted)
          if (g.has_edge(u, w)) {
            if (w0 < 0) w0 = w;
            if (colors[g.edge_index(u, w)] != 0) all_red = false;
          }
        if (!all_red || w0 < 0) continue;
        local.recolored = true;
        for (int w : m_sorted)
          if (w != w0 && !g.has_edge(u, w)) set(w0, w, 1);
        break;
      }
    }
  }
  for (int& c : colors)
    if (c < 0) c = 0;

  EdgeColoring chi(g, std::move(colors), 2);
  if (satisfied_anti_pairs(g, chi) < k)
    throw std::logic_error("clique coloring fell short of k anti-edge pairs");
  if (info) *info = local;
  return chi;
}

KernelResult kernelize(const Graph& g, int k) {
  require_connected_undirected(g, "kernelize()");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  int n = g.vertex_count();
  int m = g.edge_count();

  KernelResult result;
  result.k = k;

  // Early yes: some vertex has at least k non-neighbors.
  for (int v = 0; v < n; ++v) {
    if (n - 1 - g.degree(v) < k) continue;
    result.outcome = KernelOutcome::yes;
    result.witness = bfs_layer_coloring(g, v);
    result.certified_count = m + satisfied_anti_pairs(g, *result.witness);
    result.reason = "bfs layering from a vertex with |O_v| >= k";
    result.trace.chosen_v = v;
    result.trace.o_v = non_neighbors(g, v);
    if (result.certified_count < m + k)
      throw std::logic_error("yes certificate short of |E| + k");
    return result;
  }

  // No: not enough anti-edges to ever satisfy |E| + k pairs.
  if (anti_edge_count(g) < k) {
    result.outcome = KernelOutcome::no;
    result.reason = "graph has fewer than k anti-edges";
    return result;
  }

  int v = 0;
  result.trace.chosen_v = v;
  result.trace.o_v = non_neighbors(g, v);
  const auto& nv = g.neighbors(v);
  auto comps = complement_components(g, nv);
  result.trace.h_components = comps;
  int isolated = 0;
  std::vector<int> isolated_vertices;
  for (const auto& comp : comps)
    if (comp.size() == 1) {
      ++isolated;
      isolated_vertices.push_back(comp[0]);
    }
  result.trace.isolated_count = isolated;

  if (isolated >= k) {
    // Isolated H vertices are mutually adjacent in G and adjacent to v:
    // a clique of size > k, grown to a maximal one.
    isolated_vertices.push_back(v);
    auto clique = greedy_extend_clique(g, std::move(isolated_vertices));
    result.trace.clique = clique;
    result.outcome = KernelOutcome::yes;
    result.witness = clique_coloring(g, clique, k);
    result.certified_count = m + satisfied_anti_pairs(g, *result.witness);
    result.reason = "clique coloring from isolated complement vertices";
    if (result.certified_count < m + k)
      throw std::logic_error("yes certificate short of |E| + k");
    return result;
  }

  int r = static_cast<int>(comps.size());
  int total = static_cast<int>(nv.size());
  if (total - r >= k) {
    result.outcome = KernelOutcome::yes;
    result.witness = component_coloring(g, v);
    result.certified_count = m + satisfied_anti_pairs(g, *result.witness);
    result.reason = "component coloring of the complement neighborhood";
    if (result.certified_count < m + k)
      throw std::logic_error("yes certificate short of |E| + k");
    return result;
  }

  // Kernel: the cascade's counting now bounds the instance by 4k vertices.
  int s = 0;
  for (const auto& comp : comps) s += comp.size() >= 2 ? 1 : 0;
  if (isolated >= k) throw std::logic_error("kernel stage reached with isolated >= k");
  if (s >= k) throw std::logic_error("kernel stage reached with s >= k");
  if (r >= 2 * k) throw std::logic_error("kernel stage reached with r >= 2k");
  if (total >= 3 * k) throw std::logic_error("kernel stage reached with |H| >= 3k");
  if (n > 4 * k) throw std::logic_error("kernel exceeds 4k vertices");
  result.outcome = KernelOutcome::kernel;
  result.kernel = g;
  result.reason = "instance is its own kernel";
  return result;
}

MaxPairsDecision decide_maxpairs2(const Graph& g, int k, const SolveLimits& lim) {
  MaxPairsDecision decision;
  decision.kernel_result = kernelize(g, k);
  switch (decision.kernel_result.outcome) {
    case KernelOutcome::yes:
      decision.yes = true;
      decision.witness = decision.kernel_result.witness;
      break;
    case KernelOutcome::no:
      decision.yes = false;
      break;
    case KernelOutcome::kernel: {
      auto solved = maxpairs2_exact(*decision.kernel_result.kernel, lim);
      decision.yes = solved.value >= g.edge_count() + k;
      if (decision.yes) decision.witness = solved.witness;
      break;
    }
  }
  return decision;
}

}  // namespace rainbow
