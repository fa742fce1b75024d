#pragma once

#include <random>
#include <string>
#include <vector>

#include "rainbowkit/cnf.hpp"
#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"
#include "rainbowkit/verify.hpp"

namespace rainbow::oracle {

// Independent brute-force oracles. These deliberately avoid the library's
// solver and DP code paths: equivalence suites judge one against the
// other.

/// Proper vertex colorability with at most k colors, by backtracking.
bool chromatic_number_at_most(const Graph& g, int k);

/// Satisfiability by enumerating all assignments (guards num_vars <= 24).
bool cnf_satisfiable(const CnfFormula& f);

/// Rainbow-path existence by exhaustive simple-path enumeration.
bool rainbow_path_bruteforce(const Graph& g, const EdgeColoring& c, int u, int v,
                             VerifyMode mode);

/// All connected labeled undirected graphs on n vertices (n <= 6).
std::vector<Graph> enumerate_connected_graphs(int n);

// Seeded instance generators for the equivalence suites.
Graph random_connected_graph(std::mt19937& rng, int n, double extra_edge_prob);
Graph random_connected_digraph(std::mt19937& rng, int n, double extra_arc_prob);
PairSet random_pair_subset(std::mt19937& rng, int n, double keep_prob);
CnfFormula random_cnf(std::mt19937& rng, int max_vars, int max_clauses);

struct EquivStats {
  int trials = 0;
  int mismatches = 0;
  std::vector<std::string> notes;
};

// Small-instance equivalence suites, one per reduction: the brute-force
// answer on the source must match the brute-force answer on the target
// for every trial. Deterministic given (trials, seed).
EquivStats equiv_vc_to_subset_src(int trials, unsigned seed);
EquivStats equiv_subset_src_to_src(int trials, unsigned seed);
EquivStats equiv_subset_rc_to_rc(int trials, unsigned seed);
EquivStats equiv_sat_to_dir_subset(int trials, unsigned seed);
EquivStats equiv_dir_subset_to_dir_rc2(int trials, unsigned seed);

}  // namespace rainbow::oracle
