#include "rainbowkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "json_detail.hpp"
#include "rainbowkit/io.hpp"
#include "rainbowkit/kernel.hpp"
#include "rainbowkit/oracles.hpp"
#include "rainbowkit/reductions.hpp"
#include "rainbowkit/solver.hpp"

namespace rainbow {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "fnv:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VerifyMode parse_mode(const std::string& name) {
  if (name == "plain") return VerifyMode::plain;
  if (name == "geodesic") return VerifyMode::geodesic;
  if (name == "directed") return VerifyMode::directed;
  throw std::runtime_error("unknown mode '" + name + "'");
}

struct Ctx {
  RunReport report;
  json result;

  std::string load(const std::string& kind, const std::string& path) {
    std::string content = read_file(path);
    report.input_digests[kind] = fnv1a64(content);
    return content;
  }
};

void maybe_write_witness(const std::string& path, const EdgeColoring& witness) {
  if (!path.empty()) write_file(path, serialize_coloring(witness));
}

}  // namespace

RunReport cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  auto started = std::chrono::steady_clock::now();
  Ctx ctx;
  CLI::App app{"rainbowkit: exact rainbow connectivity, hardness gadgets and the "
               "2-color FPT kernel"};
  app.require_subcommand(1);

  std::string graph_path, pairs_path, coloring_path, cnf_path, mode_name = "plain";
  std::string out_prefix, witness_out, reduction_name;
  int k = 0;
  int trials = 50;
  unsigned seed = 20240331;
  bool have_k = false;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph_path, "graph file (p edge/arc header)")->required();
  };
  auto add_witness = [&](CLI::App* cmd) {
    cmd->add_option("--witness-out", witness_out,
                    "write the witness coloring to this file");
  };

  auto* rc_cmd = app.add_subcommand("rc", "exact rainbow connection number");
  add_graph(rc_cmd);
  add_witness(rc_cmd);
  auto* src_cmd = app.add_subcommand("src", "exact strong rainbow connection number");
  add_graph(src_cmd);
  add_witness(src_cmd);
  auto* rcd_cmd =
      app.add_subcommand("rc-directed", "exact directed rainbow connection number");
  add_graph(rcd_cmd);
  add_witness(rcd_cmd);

  auto* subrc_cmd = app.add_subcommand(
      "subset-rc", "minimum colors rainbow-connecting a pair set (plain/directed)");
  add_graph(subrc_cmd);
  subrc_cmd->add_option("--pairs", pairs_path, "pairs file")->required();
  subrc_cmd->add_option("--k", k, "decide this k instead of minimizing");
  add_witness(subrc_cmd);

  auto* subsrc_cmd = app.add_subcommand(
      "subset-src", "minimum colors geodesic-rainbow-connecting a pair set");
  add_graph(subsrc_cmd);
  subsrc_cmd->add_option("--pairs", pairs_path, "pairs file")->required();
  subsrc_cmd->add_option("--k", k, "decide this k instead of minimizing");
  add_witness(subsrc_cmd);

  auto* mp_cmd = app.add_subcommand(
      "maxpairs2", "maximum pairs rainbow-connected by any 2-coloring");
  add_graph(mp_cmd);
  add_witness(mp_cmd);

  auto* dmp_cmd = app.add_subcommand(
      "decide-maxpairs2", "kernelize, then decide |E|+k pairs with 2 colors");
  add_graph(dmp_cmd);
  dmp_cmd->add_option("--k", k, "parameter k")->required();
  add_witness(dmp_cmd);

  auto* verify_cmd =
      app.add_subcommand("verify", "verify a coloring against a pair set");
  add_graph(verify_cmd);
  verify_cmd->add_option("--coloring", coloring_path, "coloring file")->required();
  verify_cmd->add_option("--pairs", pairs_path, "pairs file (default: all pairs)");
  verify_cmd->add_option("--mode", mode_name, "plain | geodesic | directed")
      ->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "run a hardness reduction");
  reduce_cmd
      ->add_option("name", reduction_name,
                   "vc-to-subset-src | subset-src-to-src | subset-rc-to-rc | "
                   "sat-to-dir-subset | dir-subset-to-dir-rc2")
      ->required();
  reduce_cmd->add_option("input", graph_path, "graph or cnf input file")->required();
  reduce_cmd->add_option("--pairs", pairs_path, "pairs file");
  reduce_cmd->add_option("--k", k, "target color count");
  reduce_cmd->add_option("--out", out_prefix, "output file prefix");

  auto* kern_cmd = app.add_subcommand("kernelize", "run the 4k-vertex kernelization");
  add_graph(kern_cmd);
  kern_cmd->add_option("--k", k, "parameter k")->required();

  auto* equiv_cmd = app.add_subcommand(
      "oracle-equiv", "run the small-instance equivalence suite for a reduction");
  equiv_cmd->add_option("reduction", reduction_name, "reduction name")->required();
  equiv_cmd->add_option("--trials", trials, "number of seeded trials");
  equiv_cmd->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    ctx.report.exit_code = 0;
    return ctx.report;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    ctx.report.exit_code = 2;
    return ctx.report;
  }

  have_k = k > 0;
  auto lim = SolveLimits::defaults();

  try {
    if (rc_cmd->parsed() || src_cmd->parsed() || rcd_cmd->parsed()) {
      Graph g = parse_graph(ctx.load("graph", graph_path));
      SolveResult res;
      std::string key;
      if (rc_cmd->parsed()) {
        ctx.report.command = "rc";
        key = "rc";
        res = rc_exact(g, lim);
      } else if (src_cmd->parsed()) {
        ctx.report.command = "src";
        key = "src";
        res = src_exact(g, lim);
      } else {
        ctx.report.command = "rc-directed";
        key = "rc_directed";
        res = rc_directed_exact(g, lim);
      }
      ctx.result[key] = res.value;
      ctx.result["witness"] = detail::coloring_to_json(res.witness);
      maybe_write_witness(witness_out, res.witness);
    } else if (subrc_cmd->parsed() || subsrc_cmd->parsed()) {
      Graph g = parse_graph(ctx.load("graph", graph_path));
      PairSet p = parse_pairs(ctx.load("pairs", pairs_path));
      VerifyMode mode;
      if (subsrc_cmd->parsed()) {
        ctx.report.command = "subset-src";
        mode = VerifyMode::geodesic;
      } else {
        ctx.report.command = "subset-rc";
        mode = g.is_directed() ? VerifyMode::directed : VerifyMode::plain;
      }
      ctx.result["mode"] = mode == VerifyMode::geodesic
                               ? "geodesic"
                               : (mode == VerifyMode::directed ? "directed" : "plain");
      if (have_k) {
        auto witness = decide_subset_rc(g, p, k, mode, lim);
        ctx.result["k"] = k;
        ctx.result["yes"] = witness.has_value();
        ctx.result["witness"] =
            witness ? detail::coloring_to_json(*witness) : json();
        if (witness) maybe_write_witness(witness_out, *witness);
        ctx.report.exit_code = witness ? 0 : 1;
      } else {
        auto res = subset_rc_exact(g, p, mode, lim);
        ctx.result[subsrc_cmd->parsed() ? "subset_src" : "subset_rc"] = res.value;
        ctx.result["witness"] = detail::coloring_to_json(res.witness);
        maybe_write_witness(witness_out, res.witness);
      }
    } else if (mp_cmd->parsed()) {
      ctx.report.command = "maxpairs2";
      Graph g = parse_graph(ctx.load("graph", graph_path));
      auto res = maxpairs2_exact(g, lim);
      ctx.result["maxpairs2"] = res.value;
      ctx.result["witness"] = detail::coloring_to_json(res.witness);
      maybe_write_witness(witness_out, res.witness);
    } else if (dmp_cmd->parsed()) {
      ctx.report.command = "decide-maxpairs2";
      Graph g = parse_graph(ctx.load("graph", graph_path));
      auto decision = decide_maxpairs2(g, k, lim);
      ctx.result["k"] = k;
      ctx.result["yes"] = decision.yes;
      ctx.result["witness"] =
          decision.witness ? detail::coloring_to_json(*decision.witness) : json();
      ctx.result["kernelization"] =
          detail::kernel_result_to_json(decision.kernel_result);
      if (decision.witness) maybe_write_witness(witness_out, *decision.witness);
      ctx.report.exit_code = decision.yes ? 0 : 1;
    } else if (verify_cmd->parsed()) {
      ctx.report.command = "verify";
      Graph g = parse_graph(ctx.load("graph", graph_path));
      EdgeColoring c = parse_coloring(ctx.load("coloring", coloring_path), g);
      PairSet p = pairs_path.empty() ? PairSet::all_pairs(g.vertex_count())
                                     : parse_pairs(ctx.load("pairs", pairs_path));
      auto report = verify_pairs(g, c, p, parse_mode(mode_name));
      ctx.result = detail::verify_report_to_json(report);
      ctx.report.exit_code = report.unsatisfied.empty() ? 0 : 1;
    } else if (reduce_cmd->parsed()) {
      ctx.report.command = "reduce";
      ReductionOutput red;
      if (reduction_name == "vc-to-subset-src") {
        if (!have_k) throw std::runtime_error("vc-to-subset-src requires --k");
        red = reduce_vc_to_subset_src(parse_graph(ctx.load("graph", graph_path)), k);
      } else if (reduction_name == "subset-src-to-src") {
        if (!have_k) throw std::runtime_error("subset-src-to-src requires --k");
        if (pairs_path.empty())
          throw std::runtime_error("subset-src-to-src requires --pairs");
        red = reduce_subset_src_to_src(parse_graph(ctx.load("graph", graph_path)),
                                       parse_pairs(ctx.load("pairs", pairs_path)), k);
      } else if (reduction_name == "subset-rc-to-rc") {
        if (!have_k) throw std::runtime_error("subset-rc-to-rc requires --k");
        if (pairs_path.empty())
          throw std::runtime_error("subset-rc-to-rc requires --pairs");
        red = reduce_subset_rc_to_rc_odd(parse_graph(ctx.load("graph", graph_path)),
                                         parse_pairs(ctx.load("pairs", pairs_path)),
                                         GadgetParams::for_odd_k(k));
      } else if (reduction_name == "sat-to-dir-subset" ||
                 reduction_name == "sat-to-dir-rc2") {
        red = reduce_3sat_to_dir_subset_rc2(parse_cnf(ctx.load("cnf", graph_path)));
      } else if (reduction_name == "dir-subset-to-dir-rc2") {
        if (pairs_path.empty())
          throw std::runtime_error("dir-subset-to-dir-rc2 requires --pairs");
        red = reduce_dir_subset_to_dir_rc2(parse_graph(ctx.load("graph", graph_path)),
                                           parse_pairs(ctx.load("pairs", pairs_path)));
      } else {
        throw std::runtime_error("unknown reduction '" + reduction_name + "'");
      }
      std::string prefix = out_prefix.empty() ? graph_path + ".target" : out_prefix;
      json files;
      write_file(prefix + ".graph", serialize_graph(red.graph));
      files["graph"] = prefix + ".graph";
      if (red.pairs) {
        write_file(prefix + ".pairs", serialize_pairs(*red.pairs));
        files["pairs"] = prefix + ".pairs";
      }
      write_file(prefix + ".provenance.json", provenance_json(red) + "\n");
      files["provenance"] = prefix + ".provenance.json";
      ctx.result["reduction"] = reduction_name;
      ctx.result["vertices"] = red.graph.vertex_count();
      ctx.result["edges"] = red.graph.edge_count();
      ctx.result["k"] = red.k;
      ctx.result["pair_count"] = red.pairs ? json(red.pairs->size()) : json();
      ctx.result["files"] = files;
    } else if (kern_cmd->parsed()) {
      ctx.report.command = "kernelize";
      Graph g = parse_graph(ctx.load("graph", graph_path));
      auto res = kernelize(g, k);
      ctx.result = detail::kernel_result_to_json(res);
      ctx.report.exit_code = res.outcome == KernelOutcome::no ? 1 : 0;
    } else if (equiv_cmd->parsed()) {
      ctx.report.command = "oracle-equiv";
      oracle::EquivStats stats;
      if (reduction_name == "vc-to-subset-src")
        stats = oracle::equiv_vc_to_subset_src(trials, seed);
      else if (reduction_name == "subset-src-to-src")
        stats = oracle::equiv_subset_src_to_src(trials, seed);
      else if (reduction_name == "subset-rc-to-rc")
        stats = oracle::equiv_subset_rc_to_rc(trials, seed);
      else if (reduction_name == "sat-to-dir-subset" ||
               reduction_name == "sat-to-dir-rc2")
        stats = oracle::equiv_sat_to_dir_subset(trials, seed);
      else if (reduction_name == "dir-subset-to-dir-rc2")
        stats = oracle::equiv_dir_subset_to_dir_rc2(trials, seed);
      else
        throw std::runtime_error("unknown reduction '" + reduction_name + "'");
      ctx.result["reduction"] = reduction_name;
      ctx.result["trials"] = stats.trials;
      ctx.result["seed"] = seed;
      ctx.result["mismatches"] = stats.mismatches;
      ctx.result["notes"] = stats.notes;
      ctx.report.exit_code = stats.mismatches == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    ctx.report.exit_code = 2;
    auto fail_done = std::chrono::steady_clock::now();
    ctx.report.wall_ms =
        std::chrono::duration<double, std::milli>(fail_done - started).count();
    return ctx.report;
  }

  json payload;
  payload["schema"] = 1;
  payload["command"] = ctx.report.command;
  payload["inputs"] = ctx.report.input_digests;
  payload["result"] = ctx.result;
  ctx.report.result_json = payload.dump();
  out << ctx.report.result_json << "\n";

  auto done = std::chrono::steady_clock::now();
  ctx.report.wall_ms = std::chrono::duration<double, std::milli>(done - started).count();
  err << "wall_ms=" << ctx.report.wall_ms << "\n";
  return ctx.report;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_dispatch(args, std::cout, std::cerr).exit_code;
}

}  // namespace rainbow
