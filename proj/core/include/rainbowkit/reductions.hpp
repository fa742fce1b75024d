#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbowkit/cnf.hpp"
#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"

namespace rainbow {

/// Target instance of a reduction plus a provenance map back to source
/// entities. The source instance is retained so coloring extensions can
/// be derived from the output alone. All constructions are deterministic:
/// identical inputs give byte-identical outputs.
struct ReductionOutput {
  Graph graph;
  std::optional<PairSet> pairs;
  int k = 0;
  /// One source tag per target vertex; distinct tags for gadget-internal
  /// vertices.
  std::vector<std::string> provenance;

  Graph source_graph;
  PairSet source_pairs;
  std::optional<CnfFormula> source_formula;
};

/// Parameters of the odd-k gadget: k = 2m + 1 with m >= 1.
struct GadgetParams {
  int k = 3;
  int m = 1;
  static GadgetParams for_odd_k(int k);
};

/// Vertex coloring -> subset strong rainbow connectivity. The target is a
/// star with one leaf per source vertex and center a; P holds one pair per
/// source edge. chi(G) <= k iff the target is k-subset-src-colorable (on a
/// star, subset-src and subset-rc coincide). Leaves keep the source vertex
/// ids; the center is vertex n.
ReductionOutput reduce_vc_to_subset_src(const Graph& g, int k);

/// Reads a vertex coloring of the reduction source back off a coloring of
/// the star target: each spoke's color becomes its leaf's vertex color.
std::vector<int> decode_star_coloring(const ReductionOutput& red,
                                      const EdgeColoring& target_coloring);

/// Subset strong rainbow connectivity on a star -> strong rainbow
/// connectivity. Adds u_i/u_i' per leaf and w_{i,j}/w_{i,j}' per leaf pair
/// not in P, a complete bipartite block between the two new vertex sets,
/// and spokes from the center into the primed set. The output is bipartite
/// with parts {a} + V1 and L + V2. <star,P> is k-subset-src-colorable iff
/// src(target) <= k.
ReductionOutput reduce_subset_src_to_src(const Graph& star, const PairSet& p, int k);

/// Extends a coloring that satisfies the source subset-src instance to a
/// strong rainbow coloring of the star-to-src target, using a perfect
/// matching u_i-u_i', w_{i,j}-w_{i,j}' across the bipartite block. The
/// result is certified geodesic-rainbow-connected on all pairs.
EdgeColoring extend_src_coloring(const ReductionOutput& red,
                                 const EdgeColoring& source_coloring);

/// Exact vertex count of the composed vertex-coloring -> subset-src -> src
/// target for a source with n vertices and p_count edges; checks it
/// against the 2*C(n,2) + 3n + 3 closed-form bound and, for n >= 3,
/// against 2n^2.
long long composed_size_check(int n, long long p_count);

/// Subset rainbow connectivity -> rainbow connectivity for odd k = 2m+1.
/// Each source vertex grows two m-edge tails joined by ring edges (one
/// ring edge when m = 1), non-pairs get cross edges between tail tips, and
/// two apex vertices x,y attach to every tip. <G,P> is k-subset-rc iff
/// rc(target) <= k.
ReductionOutput reduce_subset_rc_to_rc_odd(const Graph& g, const PairSet& p,
                                           const GadgetParams& params);

/// Extends a coloring satisfying <G,P> with k colors to a rainbow coloring
/// of the odd-k target; certified rainbow-connected on all pairs.
EdgeColoring extend_rc_coloring_odd(const ReductionOutput& red,
                                    const EdgeColoring& source_coloring);

/// 3SAT -> 2-subset rainbow connectivity on a directed graph. Vertices are
/// the clauses, both literal polarities, and T/R/B; the pair set forces a
/// spine coloring whose free choices encode a truth assignment. The
/// formula is satisfiable iff the target is 2-subset-rc-colorable.
ReductionOutput reduce_3sat_to_dir_subset_rc2(const CnfFormula& f);

/// 2-subset rainbow connectivity -> rainbow connectivity <= 2 on directed
/// graphs. Every ordered non-pair gets a bridge vertex w_{i,j}, an apex
/// v_ex receives arcs from V and feeds all bridges, and the bridges carry
/// a lexicographic tournament. <G,P> is 2-subset-rc iff rc(target) <= 2.
ReductionOutput reduce_dir_subset_to_dir_rc2(const Graph& g, const PairSet& p);

/// Forward certificate for the directed construction: red into v_ex, blue
/// out of it, red/blue through each bridge, tournament red, source colors
/// elsewhere. Certified rainbow-connected on all pairs of the target.
EdgeColoring extend_dir_rc2_coloring(const ReductionOutput& red,
                                     const EdgeColoring& source_coloring);

}  // namespace rainbow
