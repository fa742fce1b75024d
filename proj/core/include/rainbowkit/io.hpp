#pragma once

#include <string>

#include "rainbowkit/cnf.hpp"
#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"
#include "rainbowkit/kernel.hpp"
#include "rainbowkit/reductions.hpp"
#include "rainbowkit/verify.hpp"

namespace rainbow {

// Text formats. Vertices and colors are 1-indexed in files, 0-indexed in
// memory. Graphs: "p edge <n> <m>" or "p arc <n> <m>" then "e <u> <v>"
// lines; "c" lines are comments. Pairs: "<u> <v>" lines. CNF: standard
// DIMACS. Colorings: header "k <count>" then "c <u> <v> <color>" lines.
// Parse errors carry the offending line number.

Graph parse_graph(const std::string& text);
PairSet parse_pairs(const std::string& text);
CnfFormula parse_cnf(const std::string& text);
EdgeColoring parse_coloring(const std::string& text, const Graph& g);

std::string serialize_graph(const Graph& g);
std::string serialize_pairs(const PairSet& p);
std::string serialize_cnf(const CnfFormula& f);
std::string serialize_coloring(const EdgeColoring& c);

// JSON renderings (0-indexed, stable key order).
std::string coloring_json(const EdgeColoring& c);
std::string verify_report_json(const VerifyReport& r);
std::string kernel_result_json(const KernelResult& r);
std::string provenance_json(const ReductionOutput& red);

}  // namespace rainbow
