#include "rainbowkit/solver.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

constexpr std::size_t kPathTableCap = 4'000'000;

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// All simple paths from u to v with at most maxlen edges, as edge-index
// lists. Directed graphs follow arc orientation (callers run both
// directions). Prunes by remaining distance to the target.
void enumerate_paths(const Graph& g, int u, int v, int maxlen,
                     std::vector<std::vector<int>>& out) {
  if (maxlen <= 0) return;
  auto dist_to = bfs_distances(g, v, /*reverse=*/g.is_directed());
  if (dist_to[u] < 0 || dist_to[u] > maxlen) return;
  std::vector<int> stack;
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[u] = 1;

  auto dfs = [&](auto&& self, int x, int depth) -> void {
    if (x == v) {
      out.push_back(stack);
      return;
    }
    if (depth == maxlen) return;
    const auto& next = g.is_directed() ? g.out_neighbors(x) : g.neighbors(x);
    for (int w : next) {
      if (on_path[w]) continue;
      if (dist_to[w] < 0 || depth + 1 + dist_to[w] > maxlen) continue;
      on_path[w] = 1;
      stack.push_back(g.edge_index(x, w));
      self(self, w, depth + 1);
      stack.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs, u, 0);
}

// All shortest u-v paths, when their length fits in maxlen: DFS over the
// DAG of distance-decreasing edges.
void enumerate_geodesics(const Graph& g, int u, int v, int maxlen,
                         std::vector<std::vector<int>>& out) {
  auto du = bfs_distances(g, u);
  auto dv = bfs_distances(g, v);
  int dist = du[v];
  if (dist < 0 || dist > maxlen) return;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int x) -> void {
    if (x == v) {
      out.push_back(stack);
      return;
    }
    for (int w : g.neighbors(x)) {
      if (du[x] + 1 != du[w] || du[w] + dv[w] != dist) continue;
      stack.push_back(g.edge_index(x, w));
      self(self, w);
      stack.pop_back();
    }
  };
  dfs(dfs, u);
}

// Candidate rainbow paths per pair. A rainbow path under k colors has at
// most k edges, so the plain/directed tables stop at length k; geodesic
// tables hold shortest paths only. Pairs joined by an edge need no table.
struct PathTable {
  std::vector<Edge> pair_of;              // tracked pairs only
  std::vector<std::vector<int>> pair_paths;
  std::vector<std::vector<int>> path_edges;
  std::vector<int> path_pair;
  std::vector<std::vector<int>> edge_paths;  // per graph edge
  std::vector<int> relevant;                 // edges on at least one path
};

PathTable build_path_table(const Graph& g, const PairSet& p, int k, VerifyMode mode) {
  PathTable t;
  t.edge_paths.assign(g.edge_count(), {});
  for (const auto& [u, v] : p.pairs()) {
    bool adjacent = g.is_directed() ? g.has_edge(u, v) || g.has_edge(v, u)
                                    : g.has_edge(u, v);
    if (adjacent) continue;  // a single edge is always a rainbow path
    std::vector<std::vector<int>> paths;
    switch (mode) {
      case VerifyMode::plain:
        enumerate_paths(g, u, v, k, paths);
        break;
      case VerifyMode::geodesic:
        enumerate_geodesics(g, u, v, k, paths);
        break;
      case VerifyMode::directed:
        enumerate_paths(g, u, v, k, paths);
        enumerate_paths(g, v, u, k, paths);
        break;
    }
    int pair_id = static_cast<int>(t.pair_of.size());
    t.pair_of.push_back({u, v});
    t.pair_paths.emplace_back();
    for (auto& pe : paths) {
      int pid = static_cast<int>(t.path_edges.size());
      t.pair_paths[pair_id].push_back(pid);
      t.path_pair.push_back(pair_id);
      for (int e : pe) t.edge_paths[e].push_back(pid);
      t.path_edges.push_back(std::move(pe));
      if (t.path_edges.size() > kPathTableCap)
        throw std::runtime_error("candidate path table too large for this instance");
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!t.edge_paths[e].empty()) t.relevant.push_back(e);
  return t;
}

// Backtracking over canonical (restricted-growth) colorings of the
// relevant edges. Satisfaction and breakage of candidate paths are
// maintained incrementally with an undo trail per assignment.
class ColoringSearch {
 public:
  ColoringSearch(int edge_count, int k, const PathTable& t, bool prune, int min_colors)
      : k_(k),
        t_(t),
        prune_(prune),
        min_colors_(min_colors),
        edge_color_(edge_count, -1),
        path_broken_(t.path_edges.size(), 0),
        path_colored_(t.path_edges.size(), 0),
        pair_alive_(t.pair_of.size()),
        pair_sat_(t.pair_of.size(), 0) {
    tracked_ = static_cast<int>(t.pair_of.size());
    for (int pr = 0; pr < tracked_; ++pr) {
      pair_alive_[pr] = static_cast<int>(t.pair_paths[pr].size());
      if (pair_alive_[pr] == 0) ++dead_count_;
    }
  }

  // All tracked pairs satisfiable with at most k colors?
  std::optional<std::vector<int>> decide() {
    if (decide_rec()) {
      auto colors = edge_color_;
      for (int& c : colors)
        if (c < 0) c = 0;
      return colors;
    }
    return std::nullopt;
  }

  // Maximize the number of satisfied tracked pairs over 2-colorings.
  struct MaxOut {
    int best = 0;
    std::vector<int> colors;
  };
  MaxOut maximize() {
    best_ = -1;
    stop_ = false;
    max_rec();
    MaxOut out;
    out.best = best_;
    out.colors = best_colors_;
    return out;
  }

 private:
  struct Frame {
    std::vector<int> broke;
    std::vector<int> incr;
    std::vector<int> newsat;
    int prev_max = -1;
  };

  void apply(int e, int c, Frame& f) {
    f.prev_max = max_used_;
    edge_color_[e] = c;
    max_used_ = std::max(max_used_, c);
    ++assigned_;
    for (int pid : t_.edge_paths[e]) {
      if (path_broken_[pid]) continue;
      const auto& pe = t_.path_edges[pid];
      bool clash = false;
      for (int oe : pe)
        if (oe != e && edge_color_[oe] == c) {
          clash = true;
          break;
        }
      int pr = t_.path_pair[pid];
      if (clash) {
        path_broken_[pid] = 1;
        f.broke.push_back(pid);
        if (--pair_alive_[pr] == 0 && !pair_sat_[pr]) ++dead_count_;
      } else {
        ++path_colored_[pid];
        f.incr.push_back(pid);
        if (path_colored_[pid] == static_cast<int>(pe.size()) && !pair_sat_[pr]) {
          pair_sat_[pr] = 1;
          f.newsat.push_back(pr);
          ++sat_count_;
        }
      }
    }
  }

  void undo(int e, Frame& f) {
    for (int pid : f.incr) --path_colored_[pid];
    for (int pid : f.broke) {
      path_broken_[pid] = 0;
      int pr = t_.path_pair[pid];
      if (pair_alive_[pr]++ == 0 && !pair_sat_[pr]) --dead_count_;
    }
    for (int pr : f.newsat) {
      pair_sat_[pr] = 0;
      --sat_count_;
    }
    max_used_ = f.prev_max;
    edge_color_[e] = -1;
    --assigned_;
  }

  // Unsatisfied pair with the fewest unbroken paths; ties to the lowest id.
  int pick_pair() const {
    int best_pr = -1, best_alive = INT_MAX;
    for (int pr = 0; pr < tracked_; ++pr) {
      if (pair_sat_[pr]) continue;
      if (pair_alive_[pr] < best_alive) {
        best_alive = pair_alive_[pr];
        best_pr = pr;
      }
    }
    return best_pr;
  }

  int first_open_edge(int pr, std::uint32_t* used_mask) const {
    for (int pid : t_.pair_paths[pr]) {
      if (path_broken_[pid]) continue;
      int edge = -1;
      std::uint32_t mask = 0;
      for (int e : t_.path_edges[pid]) {
        if (edge_color_[e] < 0) {
          if (edge < 0) edge = e;
        } else {
          mask |= std::uint32_t{1} << edge_color_[e];
        }
      }
      if (edge >= 0) {
        *used_mask = mask;
        return edge;
      }
    }
    return -1;
  }

  bool decide_rec() {
    if (sat_count_ == tracked_) return true;
    if (prune_) {
      if (dead_count_ > 0) return false;
      if (min_colors_ > 0) {
        int remaining = static_cast<int>(t_.relevant.size()) - assigned_;
        if (max_used_ + 1 + remaining < min_colors_) return false;
      }
      int pr = pick_pair();
      std::uint32_t on_path = 0;
      int e = first_open_edge(pr, &on_path);
      int cmax = std::min(max_used_ + 1, k_ - 1);
      // Colors that keep the chosen path rainbow come first.
      for (int round = 0; round < 2; ++round) {
        for (int c = 0; c <= cmax; ++c) {
          bool keeps = !(on_path >> c & 1);
          if (keeps != (round == 0)) continue;
          Frame f;
          apply(e, c, f);
          if (decide_rec()) return true;
          undo(e, f);
        }
      }
      return false;
    }
    // Unpruned reference path: static edge order, satisfaction checked at
    // the leaves only.
    if (assigned_ == static_cast<int>(t_.relevant.size())) return false;
    int e = t_.relevant[assigned_];
    int cmax = std::min(max_used_ + 1, k_ - 1);
    for (int c = 0; c <= cmax; ++c) {
      Frame f;
      apply(e, c, f);
      if (decide_rec()) return true;
      undo(e, f);
    }
    return false;
  }

  void max_rec() {
    if (stop_) return;
    int undetermined = tracked_ - sat_count_ - dead_count_;
    if (prune_ && sat_count_ + undetermined <= best_) return;
    if (undetermined == 0 || assigned_ == static_cast<int>(t_.relevant.size())) {
      if (sat_count_ > best_) {
        best_ = sat_count_;
        best_colors_ = edge_color_;
        for (int& c : best_colors_)
          if (c < 0) c = 0;
        if (best_ == tracked_) stop_ = true;
      }
      return;
    }
    int e;
    std::uint32_t on_path = 0;
    if (prune_) {
      int best_pr = -1, best_alive = INT_MAX;
      for (int pr = 0; pr < tracked_; ++pr) {
        if (pair_sat_[pr] || pair_alive_[pr] == 0) continue;
        if (pair_alive_[pr] < best_alive) {
          best_alive = pair_alive_[pr];
          best_pr = pr;
        }
      }
      e = first_open_edge(best_pr, &on_path);
    } else {
      e = t_.relevant[assigned_];
    }
    int cmax = std::min(max_used_ + 1, k_ - 1);
    for (int round = 0; round < 2; ++round) {
      for (int c = 0; c <= cmax; ++c) {
        bool keeps = !(on_path >> c & 1);
        if (keeps != (round == 0)) continue;
        Frame f;
        apply(e, c, f);
        max_rec();
        undo(e, f);
      }
    }
  }

  int k_;
  const PathTable& t_;
  bool prune_;
  int min_colors_;
  std::vector<int> edge_color_;
  std::vector<char> path_broken_;
  std::vector<int> path_colored_;
  std::vector<int> pair_alive_;
  std::vector<char> pair_sat_;
  int tracked_ = 0;
  int sat_count_ = 0;
  int dead_count_ = 0;
  int assigned_ = 0;
  int max_used_ = -1;
  int best_ = -1;
  bool stop_ = false;
  std::vector<int> best_colors_;
};

void check_mode(const Graph& g, VerifyMode mode) {
  if (mode == VerifyMode::directed && !g.is_directed())
    throw std::invalid_argument("directed mode requires a directed graph");
  if (mode != VerifyMode::directed && g.is_directed())
    throw std::invalid_argument("plain/geodesic modes require an undirected graph");
}

// Shortest connecting length per the mode; throws when no path exists.
int pair_distance(const Graph& g, int u, int v, VerifyMode mode) {
  if (mode == VerifyMode::directed) {
    int fwd = bfs_distances(g, u)[v];
    int bwd = bfs_distances(g, v)[u];
    if (fwd < 0 && bwd < 0)
      throw std::runtime_error("unsatisfiable pair " + pair_str(u, v) +
                               ": no connecting path in either direction");
    if (fwd < 0) return bwd;
    if (bwd < 0) return fwd;
    return std::min(fwd, bwd);
  }
  int d = bfs_distances(g, u)[v];
  if (d < 0)
    throw std::runtime_error("unsatisfiable pair " + pair_str(u, v) +
                             ": no connecting path");
  return d;
}

void check_guard(const Graph& g, const SolveLimits& lim) {
  if (g.edge_count() > lim.max_edges)
    throw std::runtime_error(
        "instance has " + std::to_string(g.edge_count()) +
        " edges, above the exhaustive-solver guard of " +
        std::to_string(lim.max_edges) + " (override with RAINBOWKIT_MAX_EDGES)");
}

void certify(const Graph& g, const EdgeColoring& w, const PairSet& p, VerifyMode mode) {
  auto report = verify_pairs(g, w, p, mode);
  if (!report.unsatisfied.empty())
    throw std::logic_error("solver returned a witness that fails verification");
}

std::optional<EdgeColoring> decide_impl(const Graph& g, const PairSet& p, int k,
                                        VerifyMode mode, const SolveLimits& lim,
                                        int min_colors) {
  if (k < 1) throw std::invalid_argument("color count must be at least 1");
  if (k > kColorCap)
    throw std::invalid_argument("color cap exceeded: k = " + std::to_string(k));
  PathTable table = build_path_table(g, p, k, mode);
  ColoringSearch search(g.edge_count(), k, table, lim.prune, min_colors);
  auto colors = search.decide();
  if (!colors) return std::nullopt;
  EdgeColoring witness(g, std::move(*colors), k);
  certify(g, witness, p, mode);
  return witness;
}

SolveResult minimize(const Graph& g, const PairSet& p, VerifyMode mode, int lower,
                     int upper, const SolveLimits& lim) {
  lower = std::max(lower, 1);
  for (int k = lower; k <= upper; ++k) {
    auto witness = decide_impl(g, p, k, mode, lim, k > lower ? k : 0);
    if (witness) return {k, std::move(*witness)};
  }
  throw std::logic_error("exhausted color budget without a witness");
}

void validate_pairs(const Graph& g, const PairSet& p) {
  if (p.max_vertex() >= g.vertex_count())
    throw std::invalid_argument("pair endpoint out of range");
}

}  // namespace

SolveLimits SolveLimits::defaults() {
  SolveLimits lim;
  if (const char* env = std::getenv("RAINBOWKIT_MAX_EDGES")) {
    int v = std::atoi(env);
    if (v > 0) lim.max_edges = v;
  }
  return lim;
}

SolveResult rc_exact(const Graph& g, const SolveLimits& lim) {
  if (g.is_directed()) throw std::invalid_argument("rc_exact() takes an undirected graph");
  if (!connectivity_check(g)) throw std::invalid_argument("rc_exact() requires a connected graph");
  check_guard(g, lim);
  int n = g.vertex_count();
  if (n <= 1) return {1, EdgeColoring(g, {}, 1)};
  int diameter = 0;
  for (int v = 0; v < n; ++v) {
    auto d = bfs_distances(g, v);
    diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
  }
  return minimize(g, PairSet::all_pairs(n), VerifyMode::plain, diameter, n - 1, lim);
}

SolveResult src_exact(const Graph& g, const SolveLimits& lim) {
  if (g.is_directed()) throw std::invalid_argument("src_exact() takes an undirected graph");
  if (!connectivity_check(g)) throw std::invalid_argument("src_exact() requires a connected graph");
  check_guard(g, lim);
  int n = g.vertex_count();
  if (n <= 1) return {1, EdgeColoring(g, {}, 1)};
  int diameter = 0;
  for (int v = 0; v < n; ++v) {
    auto d = bfs_distances(g, v);
    diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
  }
  return minimize(g, PairSet::all_pairs(n), VerifyMode::geodesic, diameter,
                  g.edge_count(), lim);
}

SolveResult rc_directed_exact(const Graph& g, const SolveLimits& lim) {
  if (!g.is_directed())
    throw std::invalid_argument("rc_directed_exact() takes a directed graph");
  if (!connectivity_check(g))
    throw std::invalid_argument(
        "rc_directed_exact() requires a connected directed graph (a directed "
        "path in at least one direction between every two vertices)");
  check_guard(g, lim);
  int n = g.vertex_count();
  if (n <= 1) return {1, EdgeColoring(g, {}, 1)};
  int lower = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      lower = std::max(lower, pair_distance(g, u, v, VerifyMode::directed));
  return minimize(g, PairSet::all_pairs(n), VerifyMode::directed, lower,
                  g.edge_count(), lim);
}

SolveResult subset_rc_exact(const Graph& g, const PairSet& p, VerifyMode mode,
                            const SolveLimits& lim) {
  check_mode(g, mode);
  validate_pairs(g, p);
  check_guard(g, lim);
  if (p.empty())
    return {1, EdgeColoring(g, std::vector<int>(g.edge_count(), 0), 1)};
  int lower = 0;
  for (const auto& [u, v] : p.pairs())
    lower = std::max(lower, pair_distance(g, u, v, mode));
  int upper = mode == VerifyMode::plain ? g.vertex_count() - 1 : g.edge_count();
  return minimize(g, p, mode, lower, upper, lim);
}

std::optional<EdgeColoring> decide_subset_rc(const Graph& g, const PairSet& p, int k,
                                             VerifyMode mode, const SolveLimits& lim) {
  check_mode(g, mode);
  validate_pairs(g, p);
  check_guard(g, lim);
  for (const auto& [u, v] : p.pairs()) pair_distance(g, u, v, mode);
  return decide_impl(g, p, k, mode, lim, 0);
}

SolveResult maxpairs2_exact(const Graph& g, const SolveLimits& lim) {
  if (g.is_directed())
    throw std::invalid_argument("maxpairs2_exact() takes an undirected graph");
  if (!connectivity_check(g))
    throw std::invalid_argument("maxpairs2_exact() requires a connected graph");
  check_guard(g, lim);
  int n = g.vertex_count();
  PathTable table = build_path_table(g, PairSet::all_pairs(n), 2, VerifyMode::plain);
  ColoringSearch search(g.edge_count(), 2, table, lim.prune, 0);
  auto out = search.maximize();
  if (out.colors.empty()) out.colors.assign(g.edge_count(), 0);
  int value = g.edge_count() + std::max(out.best, 0);
  EdgeColoring witness(g, std::move(out.colors), 2);
  auto report = verify_pairs(g, witness, PairSet::all_pairs(n), VerifyMode::plain);
  if (report.count_satisfied != value)
    throw std::logic_error("maxpairs2 witness count disagrees with the verifier");
  return {value, std::move(witness)};
}

void for_each_canonical_coloring(int m, int k,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> colors(m, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == m) {
      fn(colors);
      return;
    }
    int cmax = std::min(max_used + 1, k - 1);
    for (int c = 0; c <= cmax; ++c) {
      colors[i] = c;
      self(self, i + 1, std::max(max_used, c));
    }
  };
  if (m == 0) {
    fn(colors);
    return;
  }
  rec(rec, 0, -1);
}

}  // namespace rainbow
