/*
 *   Copyright 2026 The svcc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "svcc/errors.hpp"
#include "svcc/graph_io.hpp"
#include "svcc/la_driver.hpp"
#include "svcc/oracle.hpp"
#include "svcc/report.hpp"
#include "svcc/sv.hpp"

namespace svcc::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.path, "graph file (.mtx Matrix Market, anything else an edge list)")->required();
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "mtx", "edgelist"}));
}

CsrGraph load(const InputOptions& in) {
  const bool mtx = in.format == "mtx" || (in.format == "auto" && std::filesystem::path(in.path).extension() == ".mtx");
  return mtx ? io::read_matrix_market(in.path) : io::read_edge_list(in.path);
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  write(file);
}

bool matches_oracle(const CsrGraph& g, const Labeling& labeling) {
  const auto edges = g.edge_list();
  return union_find_labels(g.num_vertices(), edges) == labeling;
}

KernelMode parse_kernel(const std::string& name) {
  if (name == "dense-only") return KernelMode::dense_only;
  if (name == "sparse-only") return KernelMode::sparse_only;
  return KernelMode::automatic;
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  InputOptions input;
  std::string algo = "fastsv-la";
  int sv_level = 5;
  std::optional<bool> hook_grandparent, hook_stochastic, hook_aggressive, early_termination;
  std::string kernel = "auto";
  double threshold = 0.1;
  int threads = 1;
  bool verify = false;
  std::string output;
  std::string labels;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  const CsrGraph g = load(a.input);
  RunOptions opts;
  opts.threads = a.threads;

  report::RunReport rep;
  rep.n = g.num_vertices();
  rep.m = g.num_edges();
  rep.source = a.input.path;
  rep.algorithm = a.algo;
  rep.threads = a.threads;

  const auto start = Clock::now();
  RunResult result;
  if (a.algo == "sv") {
    result = simplified_sv(g, opts);
  } else if (a.algo == "fastsv") {
    HookingConfig cfg = HookingConfig::cumulative(a.sv_level);
    if (a.hook_grandparent) cfg.grandparent_hooking = *a.hook_grandparent;
    if (a.hook_stochastic) cfg.stochastic_hooking = *a.hook_stochastic;
    if (a.hook_aggressive) cfg.aggressive_hooking = *a.hook_aggressive;
    if (a.early_termination) cfg.early_termination = *a.early_termination;
    rep.config = {{"grandparent_hooking", cfg.grandparent_hooking},
                  {"stochastic_hooking", cfg.stochastic_hooking},
                  {"aggressive_hooking", cfg.aggressive_hooking},
                  {"early_termination", cfg.early_termination}};
    result = fastsv(g, cfg, opts);
  } else {
    DriverConfig cfg{a.threshold, parse_kernel(a.kernel)};
    rep.config = {{"kernel", a.kernel}, {"sparse_threshold", a.threshold}};
    result = fastsv_la(g, cfg, opts);
  }
  rep.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  rep.component_count = result.labeling.component_count;
  rep.iterations = result.iterations;
  rep.trace = result.trace;
  rep.verified = a.verify && matches_oracle(g, result.labeling);

  if (!a.labels.empty()) emit(a.labels, out, [&](std::ostream& s) { report::write_labels(result.labeling, s); });
  emit(a.output, out, [&](std::ostream& s) { s << report::to_json(rep).dump(2) << '\n'; });
  if (a.verify && !rep.verified) throw VerificationFailure("labeling differs from the union-find oracle");
  return kSuccess;
}

// --- ablation --------------------------------------------------------------

struct AblationArgs {
  InputOptions input;
  int threads = 1;
  std::string output;
};

int cmd_ablation(const AblationArgs& a, std::ostream& out) {
  const CsrGraph g = load(a.input);
  RunOptions opts;
  opts.threads = a.threads;
  const auto rows = ablation_suite(g, opts);
  for (const auto& row : rows)
    if (!matches_oracle(g, row.result.labeling))
      throw VerificationFailure(row.name + " labeling differs from the union-find oracle");
  emit(a.output, out, [&](std::ostream& s) { report::write_ablation_csv(rows, s); });
  return kSuccess;
}

// --- frontier --------------------------------------------------------------

struct FrontierArgs {
  InputOptions input;
  std::string kernel = "auto";
  double threshold = 0.1;
  int threads = 1;
  bool verify = false;
  std::string output;
};

int cmd_frontier(const FrontierArgs& a, std::ostream& out) {
  const CsrGraph g = load(a.input);
  RunOptions opts;
  opts.threads = a.threads;
  const RunResult result = fastsv_la(g, {a.threshold, parse_kernel(a.kernel)}, opts);
  if (a.verify && !matches_oracle(g, result.labeling))
    throw VerificationFailure("labeling differs from the union-find oracle");
  emit(a.output, out, [&](std::ostream& s) { report::write_frontier_csv(result.trace, g.num_vertices(), s); });
  return kSuccess;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  io::GeneratorSpec spec;
  std::optional<double> degree;
  std::string output;
};

int cmd_generate(GenerateArgs a, std::ostream& out) {
  a.spec.family = io::family_from_string(a.family);
  if (a.degree) {
    if (a.spec.family != io::Family::gnp) throw InputError("--degree applies to gnp only");
    a.spec.p = a.spec.n > 1 ? std::min(1.0, *a.degree / static_cast<double>(a.spec.n - 1)) : 0.0;
  }
  const CsrGraph g = io::generate(a.spec);
  emit(a.output, out, [&](std::ostream& s) { io::write_edge_list(g, s); });
  return kSuccess;
}

}  // namespace

int exit_code_for(std::exception_ptr failure, std::ostream& err) {
  try {
    std::rethrow_exception(failure);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected components via Shiloach-Vishkin style pointer jumping"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "label components and write a JSON run report");
  add_input_options(run_cmd, run_args.input);
  run_cmd->add_option("--algo", run_args.algo, "algorithm")->check(CLI::IsMember({"sv", "fastsv", "fastsv-la"}));
  run_cmd->add_option("--sv-level", run_args.sv_level, "cumulative optimization level for fastsv")
      ->check(CLI::Range(1, 5));
  run_cmd->add_option("--hook-grandparent", run_args.hook_grandparent, "override grandparent hooking");
  run_cmd->add_option("--hook-stochastic", run_args.hook_stochastic, "override stochastic hooking");
  run_cmd->add_option("--hook-aggressive", run_args.hook_aggressive, "override aggressive hooking");
  run_cmd->add_option("--early-termination", run_args.early_termination, "override early termination");
  run_cmd->add_option("--kernel", run_args.kernel, "fastsv-la kernel selection")
      ->check(CLI::IsMember({"auto", "dense-only", "sparse-only"}));
  run_cmd->add_option("--threshold", run_args.threshold, "fastsv-la sparse threshold")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--threads", run_args.threads, "worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--verify", run_args.verify, "compare against the union-find oracle");
  run_cmd->add_option("-o,--output", run_args.output, "report path (default stdout)");
  run_cmd->add_option("--labels", run_args.labels, "write 'vertex label' lines to this path");

  AblationArgs abl_args;
  auto* abl_cmd = app.add_subcommand("ablation", "iteration counts for sv1..sv5 as CSV");
  add_input_options(abl_cmd, abl_args.input);
  abl_cmd->add_option("--threads", abl_args.threads, "worker threads")->check(CLI::PositiveNumber);
  abl_cmd->add_option("-o,--output", abl_args.output, "CSV path (default stdout)");

  FrontierArgs fr_args;
  auto* fr_cmd = app.add_subcommand("frontier", "per-iteration grandparent changes of fastsv-la as CSV");
  add_input_options(fr_cmd, fr_args.input);
  fr_cmd->add_option("--kernel", fr_args.kernel, "kernel selection")
      ->check(CLI::IsMember({"auto", "dense-only", "sparse-only"}));
  fr_cmd->add_option("--threshold", fr_args.threshold, "sparse threshold")->check(CLI::Range(0.0, 1.0));
  fr_cmd->add_option("--threads", fr_args.threads, "worker threads")->check(CLI::PositiveNumber);
  fr_cmd->add_flag("--verify", fr_args.verify, "compare against the union-find oracle");
  fr_cmd->add_option("-o,--output", fr_args.output, "CSV path (default stdout)");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "write a generated graph as an edge list");
  gen_cmd->add_option("--family", gen_args.family, "path|cycle|star|complete|grid2d|gnp|component_mix")->required();
  gen_cmd->add_option("-n,--n", gen_args.spec.n, "vertex count");
  gen_cmd->add_option("--rows", gen_args.spec.rows, "grid rows");
  gen_cmd->add_option("--cols", gen_args.spec.cols, "grid columns");
  auto* p_opt = gen_cmd->add_option("-p,--p", gen_args.spec.p, "edge probability");
  gen_cmd->add_option("--degree", gen_args.degree, "expected degree for gnp (sets p = d/(n-1))")->excludes(p_opt);
  gen_cmd->add_option("--blocks", gen_args.spec.blocks, "component_mix block count");
  gen_cmd->add_option("--block-size", gen_args.spec.block_size, "component_mix block size");
  gen_cmd->add_option("--seed", gen_args.spec.seed, "PRNG seed");
  gen_cmd->add_option("-o,--output", gen_args.output, "edge list path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*run_cmd) return cmd_run(run_args, out);
    if (*abl_cmd) return cmd_ablation(abl_args, out);
    if (*fr_cmd) return cmd_frontier(fr_args, out);
    return cmd_generate(gen_args, out);
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

}  // namespace svcc::cli
