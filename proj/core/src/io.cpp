#include "rainbowkit/io.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json_detail.hpp"

namespace rainbow {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

// Splits into lines, keeping 1-based numbering for diagnostics.
std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur)) lines.push_back(cur);
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = lines_of(text);
  bool have_header = false;
  bool directed = false;
  int n = 0, declared_m = 0;
  std::vector<Edge> edges;
  for (size_t i = 0; i < lines.size(); ++i) {
    int ln = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    std::istringstream in(lines[i]);
    std::string kind;
    in >> kind;
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) fail(ln, "duplicate header");
      std::string fmt;
      if (!(in >> fmt >> n >> declared_m)) fail(ln, "malformed header");
      if (fmt == "edge")
        directed = false;
      else if (fmt == "arc")
        directed = true;
      else
        fail(ln, "unknown format '" + fmt + "' (expected edge or arc)");
      if (n < 0 || declared_m < 0) fail(ln, "negative counts in header");
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) fail(ln, "edge before header");
      int u, v;
      if (!(in >> u >> v)) fail(ln, "malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n) fail(ln, "vertex out of range (1-indexed)");
      if (u == v) fail(ln, "self-loop rejected");
      edges.push_back({u - 1, v - 1});
    } else {
      fail(ln, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw std::runtime_error("missing 'p' header line");
  if (static_cast<int>(edges.size()) != declared_m)
    throw std::runtime_error("header declares " + std::to_string(declared_m) +
                             " edges but file has " + std::to_string(edges.size()));
  return directed ? Graph::directed(n, std::move(edges))
                  : Graph::undirected(n, std::move(edges));
}

PairSet parse_pairs(const std::string& text) {
  auto lines = lines_of(text);
  std::vector<Edge> pairs;
  for (size_t i = 0; i < lines.size(); ++i) {
    int ln = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    std::istringstream in(lines[i]);
    std::string first;
    in >> first;
    if (first == "c") continue;
    int u, v;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      fail(ln, "malformed pair line");
    }
    if (!(in >> v)) fail(ln, "malformed pair line");
    if (u < 1 || v < 1) fail(ln, "vertex out of range (1-indexed)");
    pairs.push_back({u - 1, v - 1});
  }
  return PairSet(std::move(pairs));
}

CnfFormula parse_cnf(const std::string& text) {
  auto lines = lines_of(text);
  bool have_header = false;
  int nv = 0, declared_clauses = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  for (size_t i = 0; i < lines.size(); ++i) {
    int ln = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    std::istringstream in(lines[i]);
    std::string first;
    in >> first;
    if (first == "c") continue;
    if (first == "p") {
      if (have_header) fail(ln, "duplicate header");
      std::string fmt;
      if (!(in >> fmt >> nv >> declared_clauses) || fmt != "cnf")
        fail(ln, "malformed cnf header");
      have_header = true;
      continue;
    }
    if (!have_header) fail(ln, "clause before header");
    int lit;
    try {
      lit = std::stoi(first);
    } catch (const std::exception&) {
      fail(ln, "malformed literal");
    }
    while (true) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
      if (!(in >> lit)) break;
    }
  }
  if (!have_header) throw std::runtime_error("missing 'p cnf' header line");
  if (!current.empty()) throw std::runtime_error("unterminated clause at end of file");
  if (static_cast<int>(clauses.size()) != declared_clauses)
    throw std::runtime_error("header declares " + std::to_string(declared_clauses) +
                             " clauses but file has " + std::to_string(clauses.size()));
  return CnfFormula(nv, std::move(clauses));
}

EdgeColoring parse_coloring(const std::string& text, const Graph& g) {
  auto lines = lines_of(text);
  int k = -1;
  std::vector<int> colors(g.edge_count(), -1);
  for (size_t i = 0; i < lines.size(); ++i) {
    int ln = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    std::istringstream in(lines[i]);
    std::string kind;
    in >> kind;
    if (kind == "k") {
      if (k >= 0) fail(ln, "duplicate 'k' header");
      if (!(in >> k) || k < 1) fail(ln, "malformed color count");
    } else if (kind == "c") {
      if (k < 0) fail(ln, "color line before 'k' header");
      int u, v, col;
      if (!(in >> u >> v >> col)) fail(ln, "malformed color line");
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        fail(ln, "vertex out of range (1-indexed)");
      if (col < 1 || col > k) fail(ln, "color out of range (1-indexed)");
      int e = g.edge_index(u - 1, v - 1);
      if (e < 0) fail(ln, "no such edge in the graph");
      if (colors[e] >= 0) fail(ln, "edge colored twice");
      colors[e] = col - 1;
    } else {
      fail(ln, "unknown line type '" + kind + "'");
    }
  }
  if (k < 0) throw std::runtime_error("missing 'k' header line");
  for (int e = 0; e < g.edge_count(); ++e)
    if (colors[e] < 0)
      throw std::runtime_error("edge (" + std::to_string(g.edge(e).first + 1) + "," +
                               std::to_string(g.edge(e).second + 1) + ") is uncolored");
  return EdgeColoring(g, std::move(colors), k);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << (g.is_directed() ? "arc" : "edge") << " " << g.vertex_count() << " "
      << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string serialize_pairs(const PairSet& p) {
  std::ostringstream out;
  for (const auto& [u, v] : p.pairs()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string serialize_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << " " << f.num_clauses() << "\n";
  for (const auto& clause : f.clauses()) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::string serialize_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  out << "k " << c.k() << "\n";
  const Graph& g = c.shape();
  for (int e = 0; e < g.edge_count(); ++e)
    out << "c " << g.edge(e).first + 1 << " " << g.edge(e).second + 1 << " "
        << c.color_at(e) + 1 << "\n";
  return out.str();
}

namespace detail {

nlohmann::json coloring_to_json(const EdgeColoring& c) {
  nlohmann::json edges = nlohmann::json::array();
  const Graph& g = c.shape();
  for (int e = 0; e < g.edge_count(); ++e)
    edges.push_back({g.edge(e).first, g.edge(e).second, c.color_at(e)});
  return {{"k", c.k()}, {"edges", edges}};
}

nlohmann::json pairs_to_json(const PairSet& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : p.pairs()) out.push_back({u, v});
  return out;
}

nlohmann::json verify_report_to_json(const VerifyReport& r) {
  return {{"count_satisfied", r.count_satisfied},
          {"satisfied", pairs_to_json(r.satisfied)},
          {"unsatisfied", pairs_to_json(r.unsatisfied)}};
}

nlohmann::json kernel_result_to_json(const KernelResult& r) {
  nlohmann::json out;
  switch (r.outcome) {
    case KernelOutcome::yes:
      out["outcome"] = "yes";
      break;
    case KernelOutcome::no:
      out["outcome"] = "no";
      break;
    case KernelOutcome::kernel:
      out["outcome"] = "kernel";
      break;
  }
  out["k"] = r.k;
  out["reason"] = r.reason;
  out["witness"] = r.witness ? coloring_to_json(*r.witness) : nlohmann::json();
  out["certified_count"] = r.certified_count;
  if (r.kernel) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : r.kernel->edges()) edges.push_back({u, v});
    out["kernel"] = {{"n", r.kernel->vertex_count()}, {"edges", edges}};
  } else {
    out["kernel"] = nlohmann::json();
  }
  nlohmann::json trace;
  trace["chosen_v"] = r.trace.chosen_v;
  trace["o_v"] = r.trace.o_v;
  trace["h_components"] = r.trace.h_components;
  trace["isolated_count"] = r.trace.isolated_count;
  trace["clique"] = r.trace.clique ? nlohmann::json(*r.trace.clique) : nlohmann::json();
  out["trace"] = trace;
  return out;
}

nlohmann::json provenance_to_json(const ReductionOutput& red) {
  nlohmann::json out = nlohmann::json::object();
  for (size_t v = 0; v < red.provenance.size(); ++v)
    out[std::to_string(v)] = red.provenance[v];
  return out;
}

}  // namespace detail

std::string coloring_json(const EdgeColoring& c) {
  return detail::coloring_to_json(c).dump();
}

std::string verify_report_json(const VerifyReport& r) {
  return detail::verify_report_to_json(r).dump();
}

std::string kernel_result_json(const KernelResult& r) {
  return detail::kernel_result_to_json(r).dump();
}

std::string provenance_json(const ReductionOutput& red) {
  return detail::provenance_to_json(red).dump();
}

}  // namespace rainbow
