#include "rainbowkit/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rainbowkit/verify.hpp"

namespace rainbow {

namespace {

std::string tag(const std::string& name, int i) {
  return name + "(" + std::to_string(i) + ")";
}

std::string tag2(const std::string& name, int i, int j) {
  return name + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_source_match(const ReductionOutput& red, const EdgeColoring& chi) {
  if (!chi.matches(red.source_graph))
    throw std::invalid_argument("source coloring does not match the reduction source");
  if (chi.k() > red.k)
    throw std::invalid_argument("source coloring uses more than the target's k colors");
}

void require_satisfies(const Graph& g, const EdgeColoring& chi, const PairSet& p,
                       VerifyMode mode) {
  auto report = verify_pairs(g, chi, p, mode);
  if (!report.unsatisfied.empty()) {
    auto [u, v] = report.unsatisfied.pairs().front();
    throw std::invalid_argument("source coloring fails its pairs, e.g. (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
  }
}

void certify_target(const Graph& g, const EdgeColoring& chi, VerifyMode mode) {
  auto report = verify_pairs(g, chi, PairSet::all_pairs(g.vertex_count()), mode);
  if (!report.unsatisfied.empty())
    throw std::logic_error("extended coloring failed target verification");
}

// ---------------------------------------------------------------------------
// Star -> src gadget layout. Star vertices keep their ids; then one u per
// leaf, one w per leaf pair outside P, then the primed copies of both.

struct SrcLayout {
  int center = -1;
  std::vector<int> leaves;     // sorted vertex ids
  std::vector<Edge> nonpairs;  // leaf pairs (by vertex id, first < second) not in P
  int n_star = 0;
  int u_begin = 0, w_begin = 0, up_begin = 0, wp_begin = 0, total = 0;

  int u_of(int leaf_pos) const { return u_begin + leaf_pos; }
  int w_of(int np_pos) const { return w_begin + np_pos; }
  int up_of(int leaf_pos) const { return up_begin + leaf_pos; }
  int wp_of(int np_pos) const { return wp_begin + np_pos; }
  int v1_size() const {
    return static_cast<int>(leaves.size() + nonpairs.size());
  }
};

int find_star_center(const Graph& star, const PairSet& p) {
  int n = star.vertex_count();
  if (star.is_directed())
    throw std::invalid_argument("input must be an undirected star");
  if (n < 2 || star.edge_count() != n - 1)
    throw std::invalid_argument("input graph is not a star");
  if (n == 2) {
    if (!p.empty())
      throw std::invalid_argument("a 2-vertex star has one leaf; no leaf pair exists");
    return 0;
  }
  int center = -1;
  for (int v = 0; v < n; ++v)
    if (star.degree(v) == n - 1) {
      center = v;
      break;
    }
  if (center < 0) throw std::invalid_argument("input graph is not a star");
  for (const auto& e : star.edges())
    if (e.first != center && e.second != center)
      throw std::invalid_argument("input graph is not a star");
  return center;
}

SrcLayout make_src_layout(const Graph& star, const PairSet& p) {
  SrcLayout lay;
  lay.n_star = star.vertex_count();
  lay.center = find_star_center(star, p);
  for (int v = 0; v < lay.n_star; ++v)
    if (v != lay.center) lay.leaves.push_back(v);
  for (const auto& [u, v] : p.pairs())
    if (u == lay.center || v == lay.center || v >= lay.n_star)
      throw std::invalid_argument("pair (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not a leaf pair");
  for (size_t i = 0; i < lay.leaves.size(); ++i)
    for (size_t j = i + 1; j < lay.leaves.size(); ++j) {
      int a = lay.leaves[i], b = lay.leaves[j];
      if (!p.contains(a, b)) lay.nonpairs.push_back({a, b});
    }
  int nl = static_cast<int>(lay.leaves.size());
  int np = static_cast<int>(lay.nonpairs.size());
  lay.u_begin = lay.n_star;
  lay.w_begin = lay.u_begin + nl;
  lay.up_begin = lay.w_begin + np;
  lay.wp_begin = lay.up_begin + nl;
  lay.total = lay.wp_begin + np;
  return lay;
}

// ---------------------------------------------------------------------------
// Odd-k gadget layout: two m-vertex tails per source vertex, then x and y.

struct OddLayout {
  int n = 0;
  int m = 1;
  std::vector<Edge> nonpairs;  // unordered source pairs not in P
  int x = 0, y = 0, total = 0;

  // j ranges over 1..2m as in the tail walk v - u(i,1) - ... - u(i,m) and
  // v - u(i,m+1) - ... - u(i,2m).
  int u_of(int i, int j) const { return n + i * 2 * m + (j - 1); }
};

OddLayout make_odd_layout(const Graph& g, const PairSet& p, int m) {
  OddLayout lay;
  lay.n = g.vertex_count();
  lay.m = m;
  for (int i = 0; i < lay.n; ++i)
    for (int j = i + 1; j < lay.n; ++j)
      if (!p.contains(i, j)) lay.nonpairs.push_back({i, j});
  lay.x = lay.n + 2 * m * lay.n;
  lay.y = lay.x + 1;
  lay.total = lay.y + 1;
  return lay;
}

// ---------------------------------------------------------------------------
// Directed rc<=2 gadget layout: one bridge per ordered non-pair, then v_ex.

struct DirLayout {
  int n = 0;
  std::vector<Edge> ordered_nonpairs;  // lexicographic
  int w_begin = 0, v_ex = 0, total = 0;

  int w_of(int pos) const { return w_begin + pos; }
};

DirLayout make_dir_layout(const Graph& g, const PairSet& p) {
  DirLayout lay;
  lay.n = g.vertex_count();
  for (int i = 0; i < lay.n; ++i)
    for (int j = 0; j < lay.n; ++j)
      if (i != j && !p.contains(i, j)) lay.ordered_nonpairs.push_back({i, j});
  lay.w_begin = lay.n;
  lay.v_ex = lay.w_begin + static_cast<int>(lay.ordered_nonpairs.size());
  lay.total = lay.v_ex + 1;
  return lay;
}

}  // namespace

GadgetParams GadgetParams::for_odd_k(int k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("gadget requires an odd k >= 3, got " +
                                std::to_string(k));
  return GadgetParams{k, (k - 1) / 2};
}

ReductionOutput reduce_vc_to_subset_src(const Graph& g, int k) {
  if (g.is_directed())
    throw std::invalid_argument("vertex coloring source must be undirected");
  if (k < 3) throw std::invalid_argument("reduction requires k >= 3");
  int n = g.vertex_count();
  int center = n;
  std::vector<Edge> spokes;
  spokes.reserve(n);
  for (int v = 0; v < n; ++v) spokes.push_back({v, center});
  std::vector<Edge> pairs(g.edges());

  ReductionOutput out;
  out.graph = Graph::undirected(n + 1, std::move(spokes));
  out.pairs = PairSet(std::move(pairs));
  out.k = k;
  for (int v = 0; v < n; ++v) out.provenance.push_back(tag("v", v));
  out.provenance.push_back("a");
  out.source_graph = g;
  return out;
}

std::vector<int> decode_star_coloring(const ReductionOutput& red,
                                      const EdgeColoring& target_coloring) {
  if (!target_coloring.matches(red.graph))
    throw std::invalid_argument("coloring does not match the reduction target");
  int n = red.source_graph.vertex_count();
  std::vector<int> vertex_colors(n);
  for (int v = 0; v < n; ++v) vertex_colors[v] = target_coloring.color_of(v, n);
  return vertex_colors;
}

ReductionOutput reduce_subset_src_to_src(const Graph& star, const PairSet& p, int k) {
  if (k < 3) throw std::invalid_argument("reduction requires k >= 3");
  SrcLayout lay = make_src_layout(star, p);
  int nl = static_cast<int>(lay.leaves.size());
  int np = static_cast<int>(lay.nonpairs.size());

  std::vector<Edge> edges(star.edges());
  for (int i = 0; i < nl; ++i) edges.push_back({lay.leaves[i], lay.u_of(i)});
  for (int t = 0; t < np; ++t) {
    edges.push_back({lay.nonpairs[t].first, lay.w_of(t)});
    edges.push_back({lay.nonpairs[t].second, lay.w_of(t)});
  }
  // Complete bipartite block V1 x V2.
  for (int a = lay.u_begin; a < lay.up_begin; ++a)
    for (int b = lay.up_begin; b < lay.total; ++b) edges.push_back({a, b});
  for (int b = lay.up_begin; b < lay.total; ++b) edges.push_back({lay.center, b});

  ReductionOutput out;
  out.graph = Graph::undirected(lay.total, std::move(edges));
  out.k = k;
  out.provenance.resize(lay.total);
  for (int v = 0; v < lay.n_star; ++v)
    out.provenance[v] = v == lay.center ? "a" : tag("v", v);
  for (int i = 0; i < nl; ++i) out.provenance[lay.u_of(i)] = tag("u", lay.leaves[i]);
  for (int t = 0; t < np; ++t)
    out.provenance[lay.w_of(t)] =
        tag2("w", lay.nonpairs[t].first, lay.nonpairs[t].second);
  for (int i = 0; i < nl; ++i)
    out.provenance[lay.up_of(i)] = tag("u'", lay.leaves[i]);
  for (int t = 0; t < np; ++t)
    out.provenance[lay.wp_of(t)] =
        tag2("w'", lay.nonpairs[t].first, lay.nonpairs[t].second);
  out.source_graph = star;
  out.source_pairs = p;
  return out;
}

EdgeColoring extend_src_coloring(const ReductionOutput& red,
                                 const EdgeColoring& source_coloring) {
  require_source_match(red, source_coloring);
  require_satisfies(red.source_graph, source_coloring, red.source_pairs,
                    VerifyMode::geodesic);
  SrcLayout lay = make_src_layout(red.source_graph, red.source_pairs);
  const Graph& target = red.graph;
  int nl = static_cast<int>(lay.leaves.size());
  int np = static_cast<int>(lay.nonpairs.size());
  constexpr int c1 = 0, c2 = 1, c3 = 2;

  std::vector<int> colors(target.edge_count(), -1);
  auto set = [&](int a, int b, int c) { colors[target.edge_index(a, b)] = c; };

  for (const auto& [a, b] : red.source_graph.edges())
    set(a, b, source_coloring.color_of(a, b));
  for (int i = 0; i < nl; ++i) set(lay.leaves[i], lay.u_of(i), c3);
  for (int t = 0; t < np; ++t) {
    set(lay.nonpairs[t].first, lay.w_of(t), c1);
    set(lay.nonpairs[t].second, lay.w_of(t), c2);
  }
  // Perfect matching u_i <-> u_i', w_t <-> w_t' colored c1; the rest of the
  // bipartite block c2.
  for (int a = lay.u_begin; a < lay.up_begin; ++a)
    for (int b = lay.up_begin; b < lay.total; ++b)
      set(a, b, b - lay.up_begin == a - lay.u_begin ? c1 : c2);
  for (int b = lay.up_begin; b < lay.total; ++b) set(lay.center, b, c3);

  EdgeColoring chi(target, std::move(colors), red.k);
  certify_target(target, chi, VerifyMode::geodesic);
  return chi;
}

long long composed_size_check(int n, long long p_count) {
  if (n < 2) throw std::invalid_argument("composed bound needs n >= 2");
  long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (p_count < 0 || p_count > pairs)
    throw std::invalid_argument("pair count out of range");
  long long total = 3LL * n + 1 + 2 * (pairs - p_count);
  long long coarse_bound = 2 * pairs + 3LL * n + 3;
  if (total > coarse_bound)
    throw std::logic_error("composed size exceeds its closed-form bound");
  if (n >= 3 && total > 2LL * n * n)
    throw std::logic_error("composed size exceeds 2n^2");
  return total;
}

ReductionOutput reduce_subset_rc_to_rc_odd(const Graph& g, const PairSet& p,
                                           const GadgetParams& params) {
  if (g.is_directed())
    throw std::invalid_argument("odd-k gadget source must be undirected");
  if (!connectivity_check(g))
    throw std::invalid_argument("odd-k gadget source must be connected");
  if (params.k != 2 * params.m + 1 || params.m < 1)
    throw std::invalid_argument("gadget params must satisfy k = 2m + 1, m >= 1");
  if (p.max_vertex() >= g.vertex_count())
    throw std::invalid_argument("pair endpoint out of range");
  int m = params.m;
  OddLayout lay = make_odd_layout(g, p, m);

  std::vector<Edge> edges(g.edges());
  for (int i = 0; i < lay.n; ++i) {
    // Tail edges: both walks v - u(i,1..m) and v - u(i,m+1..2m).
    for (int j = 1; j <= 2 * m - 1; ++j)
      if (j % m != 0) edges.push_back({lay.u_of(i, j), lay.u_of(i, j + 1)});
    // Ring edges; a single edge when m = 1.
    if (m == 1) {
      edges.push_back({lay.u_of(i, 1), lay.u_of(i, 2)});
    } else {
      edges.push_back({lay.u_of(i, 1), lay.u_of(i, m + 1)});
      edges.push_back({lay.u_of(i, m), lay.u_of(i, 2 * m)});
    }
    edges.push_back({i, lay.u_of(i, 1)});
    edges.push_back({i, lay.u_of(i, m + 1)});
    edges.push_back({lay.x, lay.u_of(i, m)});
    edges.push_back({lay.x, lay.u_of(i, 2 * m)});
    edges.push_back({lay.y, lay.u_of(i, m)});
    edges.push_back({lay.y, lay.u_of(i, 2 * m)});
  }
  for (const auto& [i, j] : lay.nonpairs) {
    edges.push_back({lay.u_of(i, m), lay.u_of(j, 2 * m)});
    edges.push_back({lay.u_of(i, 2 * m), lay.u_of(j, m)});
  }

  ReductionOutput out;
  out.graph = Graph::undirected(lay.total, std::move(edges));
  out.k = params.k;
  out.provenance.resize(lay.total);
  for (int i = 0; i < lay.n; ++i) {
    out.provenance[i] = tag("v", i);
    for (int j = 1; j <= 2 * m; ++j) out.provenance[lay.u_of(i, j)] = tag2("u", i, j);
  }
  out.provenance[lay.x] = "x";
  out.provenance[lay.y] = "y";
  out.source_graph = g;
  out.source_pairs = p;
  return out;
}

EdgeColoring extend_rc_coloring_odd(const ReductionOutput& red,
                                    const EdgeColoring& source_coloring) {
  require_source_match(red, source_coloring);
  require_satisfies(red.source_graph, source_coloring, red.source_pairs,
                    VerifyMode::plain);
  int m = (red.k - 1) / 2;
  OddLayout lay = make_odd_layout(red.source_graph, red.source_pairs, m);
  const Graph& target = red.graph;
  auto c = [](int j) { return j - 1; };  // color index of c_j

  std::vector<int> colors(target.edge_count(), -1);
  auto set = [&](int a, int b, int col) { colors[target.edge_index(a, b)] = col; };

  for (int i = 0; i < lay.n; ++i) {
    set(i, lay.u_of(i, 1), c(1));
    set(i, lay.u_of(i, m + 1), c(m + 1));
    for (int j = 1; j <= 2 * m - 1; ++j)
      if (j % m != 0) set(lay.u_of(i, j), lay.u_of(i, j + 1), c(j + 1));
    set(lay.x, lay.u_of(i, m), c(m + 1));
    set(lay.x, lay.u_of(i, 2 * m), c(2 * m + 1));
    set(lay.y, lay.u_of(i, m), c(2 * m + 1));
    set(lay.y, lay.u_of(i, 2 * m), c(1));
    if (m != 1) {
      set(lay.u_of(i, 1), lay.u_of(i, m + 1), c(m + 1));
      set(lay.u_of(i, m), lay.u_of(i, 2 * m), c(1));
    } else {
      set(lay.u_of(i, 1), lay.u_of(i, m + 1), c(1));
    }
  }
  for (const auto& [i, j] : lay.nonpairs) {
    set(lay.u_of(i, m), lay.u_of(j, 2 * m), c(2 * m + 1));
    set(lay.u_of(i, 2 * m), lay.u_of(j, m), c(2 * m + 1));
  }
  for (const auto& [a, b] : red.source_graph.edges())
    set(a, b, source_coloring.color_of(a, b));

  EdgeColoring chi(target, std::move(colors), red.k);
  certify_target(target, chi, VerifyMode::plain);
  return chi;
}

ReductionOutput reduce_3sat_to_dir_subset_rc2(const CnfFormula& f) {
  int nv = f.num_vars();
  int nc = f.num_clauses();
  auto clause_id = [](int j) { return j; };
  auto pos_id = [&](int var) { return nc + (var - 1); };         // x_i
  auto neg_id = [&](int var) { return nc + nv + (var - 1); };    // xbar_i
  int t_id = nc + 2 * nv;
  int r_id = t_id + 1;
  int b_id = t_id + 2;

  std::vector<Edge> arcs = {{r_id, t_id}, {t_id, b_id}};
  for (int var = 1; var <= nv; ++var) {
    arcs.push_back({pos_id(var), t_id});
    arcs.push_back({t_id, neg_id(var)});
    arcs.push_back({pos_id(var), neg_id(var)});
  }
  std::vector<Edge> pairs;
  for (int j = 0; j < nc; ++j) {
    pairs.push_back({clause_id(j), t_id});
    for (int lit : f.clauses()[j]) {
      int var = std::abs(lit);
      if (lit > 0)
        arcs.push_back({clause_id(j), pos_id(var)});
      else
        arcs.push_back({neg_id(var), clause_id(j)});
      pairs.push_back({pos_id(var), clause_id(j)});
      pairs.push_back({neg_id(var), clause_id(j)});
    }
  }
  pairs.push_back({r_id, b_id});
  for (int var = 1; var <= nv; ++var) {
    pairs.push_back({r_id, neg_id(var)});
    pairs.push_back({b_id, pos_id(var)});
  }
  for (auto& pr : pairs)
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  ReductionOutput out;
  out.graph = Graph::directed(t_id + 3, std::move(arcs));
  out.pairs = PairSet(std::move(pairs));
  out.k = 2;
  out.provenance.resize(t_id + 3);
  for (int j = 0; j < nc; ++j) out.provenance[clause_id(j)] = tag("C", j + 1);
  for (int var = 1; var <= nv; ++var) {
    out.provenance[pos_id(var)] = tag("x", var);
    out.provenance[neg_id(var)] = tag("xbar", var);
  }
  out.provenance[t_id] = "T";
  out.provenance[r_id] = "R";
  out.provenance[b_id] = "B";
  out.source_formula = f;
  return out;
}

ReductionOutput reduce_dir_subset_to_dir_rc2(const Graph& g, const PairSet& p) {
  if (!g.is_directed())
    throw std::invalid_argument("directed gadget source must be directed");
  if (p.max_vertex() >= g.vertex_count())
    throw std::invalid_argument("pair endpoint out of range");
  DirLayout lay = make_dir_layout(g, p);
  int np = static_cast<int>(lay.ordered_nonpairs.size());

  std::vector<Edge> arcs(g.edges());
  for (int t = 0; t < np; ++t) {
    arcs.push_back({lay.ordered_nonpairs[t].first, lay.w_of(t)});
    arcs.push_back({lay.w_of(t), lay.ordered_nonpairs[t].second});
  }
  for (int v = 0; v < lay.n; ++v) arcs.push_back({v, lay.v_ex});
  for (int t = 0; t < np; ++t) arcs.push_back({lay.v_ex, lay.w_of(t)});
  // Tournament on the bridges, oriented by lexicographic pair order.
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) arcs.push_back({lay.w_of(a), lay.w_of(b)});

  ReductionOutput out;
  out.graph = Graph::directed(lay.total, std::move(arcs));
  out.k = 2;
  out.provenance.resize(lay.total);
  for (int v = 0; v < lay.n; ++v) out.provenance[v] = tag("v", v);
  for (int t = 0; t < np; ++t)
    out.provenance[lay.w_of(t)] =
        tag2("w", lay.ordered_nonpairs[t].first, lay.ordered_nonpairs[t].second);
  out.provenance[lay.v_ex] = "vex";
  out.source_graph = g;
  out.source_pairs = p;
  return out;
}

EdgeColoring extend_dir_rc2_coloring(const ReductionOutput& red,
                                     const EdgeColoring& source_coloring) {
  require_source_match(red, source_coloring);
  require_satisfies(red.source_graph, source_coloring, red.source_pairs,
                    VerifyMode::directed);
  DirLayout lay = make_dir_layout(red.source_graph, red.source_pairs);
  const Graph& target = red.graph;
  constexpr int red_c = 0, blue_c = 1;
  int np = static_cast<int>(lay.ordered_nonpairs.size());

  std::vector<int> colors(target.edge_count(), -1);
  auto set = [&](int a, int b, int c) { colors[target.edge_index(a, b)] = c; };

  for (const auto& [a, b] : red.source_graph.edges())
    set(a, b, source_coloring.color_of(a, b));
  for (int t = 0; t < np; ++t) {
    set(lay.ordered_nonpairs[t].first, lay.w_of(t), red_c);
    set(lay.w_of(t), lay.ordered_nonpairs[t].second, blue_c);
  }
  for (int v = 0; v < lay.n; ++v) set(v, lay.v_ex, red_c);
  for (int t = 0; t < np; ++t) set(lay.v_ex, lay.w_of(t), blue_c);
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) set(lay.w_of(a), lay.w_of(b), red_c);

  EdgeColoring chi(target, std::move(colors), 2);
  certify_target(target, chi, VerifyMode::directed);
  return chi;
}

}  // namespace rainbow
