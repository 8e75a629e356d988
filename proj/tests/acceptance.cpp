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

// Acceptance suite: runs every exit criterion over the fixture suite and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "svcc/errors.hpp"
#include "svcc/graph_io.hpp"
#include "svcc/la_driver.hpp"
#include "svcc/oracle.hpp"
#include "svcc/report.hpp"
#include "svcc/sv.hpp"

using namespace svcc;
using svcc::testing::Fixture;
using svcc::testing::FixtureKind;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kOracleBudgetSeconds = 120.0;
constexpr double kPerfBudgetSeconds = 10.0;
constexpr std::size_t kMinFixtures = 200;
const double kThresholds[] = {0.0, 0.05, 0.1, 0.5, 1.0};
const int kWorkerCounts[] = {1, 2, 8};

struct Criterion {
  int id;
  std::string name;
  std::vector<std::string> failures;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok) ++failed_checks;
  }
  std::size_t failed_checks = 0;
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

RunOptions recording(int threads = 1) {
  RunOptions o;
  o.record_snapshots = true;
  o.threads = threads;
  return o;
}

// f[u] <= u and monotone descent on every snapshot, star on exit.
bool snapshots_well_formed(const RunResult& r, std::size_t n) {
  ParentVector prev = identity_parents(n);
  for (const auto& f : r.snapshots) {
    if (f.size() != n) return false;
    for (std::size_t u = 0; u < n; ++u)
      if (f[u] > u || f[u] > prev[u]) return false;
    prev = f;
  }
  for (std::size_t u = 0; u < n; ++u)
    if (prev[prev[u]] != prev[u]) return false;
  return r.snapshots.size() == r.iterations;
}

HookingConfig config_from_mask(int mask) {
  return {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
}

}  // namespace

int main() {
  Criterion c1{1, "oracle equivalence (sv, fastsv x16, fastsv_la x3 vs union-find)", {}, {}};
  Criterion c2{2, "convergence improvement sv5 <= sv1 (strict on paths n>=32 and >=half of gnp)", {}, {}};
  Criterion c3{3, "early termination: sv5 <= sv4 and one extra iteration changes nothing", {}, {}};
  Criterion c4{4, "sparsity transparency across thresholds {0,0.05,0.1,0.5,1}", {}, {}};
  Criterion c5{5, "determinism across worker counts {1,2,8}", {}, {}};
  Criterion c6{6, "monotonicity and star invariants; violations exit with code 3", {}, {}};
  Criterion c7{7, "cross-formulation agreement fastsv(all) vs fastsv_la(auto)", {}, {}};
  Criterion c8{8, "performance smoke gnp(200000, degree 10)", {}, {}};

  const auto fixtures = testing::fixture_suite();
  c1.check(fixtures.size() >= kMinFixtures, fmt::format("only {} fixtures", fixtures.size()));

  std::size_t gnp_total = 0, gnp_strict = 0;
  double reduction_sum = 0, reduction_min = 1, reduction_max = 0;
  std::size_t reduction_count = 0;
  double oracle_seconds = 0;

  for (const Fixture& fx : fixtures) {
    const CsrGraph& g = fx.graph;
    const std::size_t n = fx.n;
    const auto edges = g.edge_list();

    // 1 and 6: every algorithm against the oracle, with snapshot checks.
    const auto t1 = Clock::now();
    const Labeling truth = union_find_labels(n, edges);
    auto check_run = [&](const RunResult& r, const std::string& what) {
      c1.check(r.labeling == truth, fx.name + ": " + what + " labeling differs from union-find");
      c6.check(snapshots_well_formed(r, n), fx.name + ": " + what + " snapshot invariant violated");
    };
    const RunResult sv1 = simplified_sv(g, recording());
    check_run(sv1, "simplified_sv");
    std::vector<RunResult> by_mask(16);
    for (int mask = 0; mask < 16; ++mask) {
      by_mask[mask] = fastsv(g, config_from_mask(mask), recording());
      check_run(by_mask[mask], fmt::format("fastsv[mask={}]", mask));
    }
    std::vector<ParentVector> dense_gf;
    const RunResult la_dense = fastsv_la(g, {0.1, KernelMode::dense_only}, recording(), &dense_gf);
    const RunResult la_sparse = fastsv_la(g, {0.1, KernelMode::sparse_only}, recording());
    const RunResult la_auto = fastsv_la(g, {0.1, KernelMode::automatic}, recording());
    check_run(la_dense, "fastsv_la[dense_only]");
    check_run(la_sparse, "fastsv_la[sparse_only]");
    check_run(la_auto, "fastsv_la[auto]");
    oracle_seconds += since(t1);

    // 2: sv1 is simplified SV, sv5 is full FastSV.
    const RunResult& sv4 = by_mask[7];
    const RunResult& sv5 = by_mask[15];
    c2.check(sv5.iterations <= sv1.iterations,
             fmt::format("{}: sv5={} > sv1={}", fx.name, sv5.iterations, sv1.iterations));
    if (fx.kind == FixtureKind::path && n >= 32)
      c2.check(sv5.iterations < sv1.iterations,
               fmt::format("{}: path not strictly improved (sv5={}, sv1={})", fx.name, sv5.iterations, sv1.iterations));
    if (fx.kind == FixtureKind::gnp) {
      ++gnp_total;
      if (sv5.iterations < sv1.iterations) ++gnp_strict;
    }
    if (sv1.iterations > 0) {
      const double red = 1.0 - static_cast<double>(sv5.iterations) / static_cast<double>(sv1.iterations);
      reduction_sum += red;
      reduction_min = std::min(reduction_min, red);
      reduction_max = std::max(reduction_max, red);
      ++reduction_count;
    }

    // 3
    c3.check(sv5.iterations <= sv4.iterations,
             fmt::format("{}: sv5={} > sv4={}", fx.name, sv5.iterations, sv4.iterations));
    ParentVector f = sv5.snapshots.back();
    const ParentVector before = f;
    fastsv_step(g, HookingConfig::all(), f);
    c3.check(f == before, fx.name + ": extra iteration after gf-stability changed f");
    ParentVector f_la = la_auto.snapshots.back();
    fastsv_step(g, HookingConfig::all(), f_la);
    c3.check(f_la == la_auto.snapshots.back(), fx.name + ": extra iteration after fastsv_la changed f");

    // 4
    auto check_flops = [&](const RunResult& r, const std::string& what) {
      for (const auto& row : r.trace) {
        if (row.kernel != KernelKind::sparse) continue;
        c4.check(row.flops <= g.num_entries(), fmt::format("{}: {} it {} flops {} > m {}", fx.name, what,
                                                           row.iteration, row.flops, g.num_entries()));
        if (row.frontier < n)
          c4.check(row.flops < g.num_entries(), fmt::format("{}: {} it {} flops {} not < m {} with frontier {}",
                                                            fx.name, what, row.iteration, row.flops,
                                                            g.num_entries(), row.frontier));
      }
    };
    c4.check(la_sparse.snapshots == la_dense.snapshots, fx.name + ": sparse_only snapshots differ from dense_only");
    check_flops(la_sparse, "sparse_only");
    for (double threshold : kThresholds) {
      std::vector<ParentVector> gf;
      const RunResult r = fastsv_la(g, {threshold, KernelMode::automatic}, recording(), &gf);
      c4.check(r.snapshots == la_dense.snapshots && gf == dense_gf,
               fmt::format("{}: threshold {} snapshots differ from dense_only", fx.name, threshold));
      check_flops(r, fmt::format("auto@{}", threshold));
    }

    // 7
    c7.check(sv5.iterations == la_auto.iterations,
             fmt::format("{}: iterations fastsv={} fastsv_la={}", fx.name, sv5.iterations, la_auto.iterations));
    c7.check(sv5.snapshots == la_auto.snapshots, fx.name + ": per-iteration f differs");
  }
  c1.check(oracle_seconds < kOracleBudgetSeconds, fmt::format("took {:.1f}s", oracle_seconds));
  c1.detail = fmt::format("{} fixtures, {:.1f}s of {:.0f}s budget", fixtures.size(), oracle_seconds,
                          kOracleBudgetSeconds);

  c2.check(2 * gnp_strict >= gnp_total, fmt::format("only {}/{} gnp fixtures strictly improved", gnp_strict, gnp_total));
  c2.detail = fmt::format("gnp strict {}/{}; sv1->sv5 reduction mean {:.1f}% min {:.1f}% max {:.1f}%", gnp_strict,
                          gnp_total, 100 * reduction_sum / static_cast<double>(reduction_count), 100 * reduction_min,
                          100 * reduction_max);

  // 5: library snapshots and CLI reports across worker counts.
  {
    std::vector<CsrGraph> graphs;
    for (std::uint64_t seed : {1, 2, 3}) {
      io::GeneratorSpec spec;
      spec.family = io::Family::gnp;
      spec.n = 20000 * seed;
      spec.p = 4.0 / static_cast<double>(spec.n);
      spec.seed = seed;
      graphs.push_back(io::generate(spec));
    }
    for (const auto& fx : fixtures)
      if (fx.kind == FixtureKind::gnp || fx.kind == FixtureKind::component_mix) graphs.push_back(fx.graph);

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const auto& g = graphs[gi];
      for (double threshold : {0.1, 0.5}) {
        std::vector<ParentVector> base_f, base_gf;
        std::string base_report;
        for (int threads : kWorkerCounts) {
          std::vector<ParentVector> gf;
          const RunResult r = fastsv_la(g, {threshold, KernelMode::automatic}, recording(threads), &gf);
          report::RunReport rep;
          rep.n = g.num_vertices();
          rep.m = g.num_edges();
          rep.algorithm = "fastsv-la";
          rep.threads = threads;
          rep.component_count = r.labeling.component_count;
          rep.iterations = r.iterations;
          rep.trace = r.trace;
          const std::string text = report::without_timing(report::to_json(rep)).dump();
          if (threads == kWorkerCounts[0]) {
            base_f = r.snapshots;
            base_gf = gf;
            base_report = text;
            continue;
          }
          c5.check(r.snapshots == base_f && gf == base_gf,
                   fmt::format("graph {} threshold {}: snapshots differ at {} workers", gi, threshold, threads));
          c5.check(text == base_report,
                   fmt::format("graph {} threshold {}: report differs at {} workers", gi, threshold, threads));
        }
      }
    }

    // Same through the CLI binary's entry point, on a file.
    const auto path = std::filesystem::temp_directory_path() / "svcc_acceptance_det.el";
    io::write_edge_list(graphs.front(), path);
    std::string base;
    for (int threads : kWorkerCounts) {
      std::ostringstream out, err;
      const int code = cli::run({"run", "-i", path.string(), "--threads", std::to_string(threads), "--verify"}, out, err);
      c5.check(code == 0, fmt::format("cli run exited {} at {} workers: {}", code, threads, err.str()));
      const std::string text = report::without_timing(nlohmann::json::parse(out.str())).dump();
      if (base.empty())
        base = text;
      else
        c5.check(text == base, fmt::format("cli report differs at {} workers", threads));
    }
    std::filesystem::remove(path);
    c5.detail = fmt::format("{} graphs, fastsv_la auto at thresholds 0.1 and 0.5", graphs.size());
  }

  // 6: the violation path itself.
  {
    bool threw = false;
    try {
      check_descent({0, 0, 1}, {0, 1, 1}, "synthetic");
    } catch (const InvariantViolation&) {
      threw = true;
    }
    c6.check(threw, "check_descent accepted an increasing entry");
    threw = false;
    try {
      labeling_from_parents({0, 0, 1});
    } catch (const InvariantViolation&) {
      threw = true;
    }
    c6.check(threw, "labeling_from_parents accepted a non-star forest");
    std::ostringstream err;
    c6.check(cli::exit_code_for(std::make_exception_ptr(InvariantViolation("x")), err) == 3,
             "invariant violation does not map to exit code 3");
  }

  // 8
  {
    io::GeneratorSpec spec;
    spec.family = io::Family::gnp;
    spec.n = 200000;
    spec.p = 10.0 / static_cast<double>(spec.n - 1);
    spec.seed = 2020;
    const auto t_gen = Clock::now();
    const CsrGraph g = io::generate(spec);
    const double gen_seconds = since(t_gen);

    const auto t_run = Clock::now();
    const RunResult r = fastsv_la(g);
    const double run_seconds = since(t_run);
    c8.check(run_seconds < kPerfBudgetSeconds, fmt::format("fastsv_la took {:.2f}s", run_seconds));

    std::ostringstream csv;
    report::write_frontier_csv(r.trace, g.num_vertices(), csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);  // header
    std::vector<unsigned long> changed;
    while (std::getline(lines, line)) {
      const auto first = line.find(',');
      const auto second = line.find(',', first + 1);
      changed.push_back(std::stoul(line.substr(first + 1, second - first - 1)));
    }
    c8.check(!changed.empty() && changed.back() == 0, "final frontier row has gf_changed != 0");
    for (std::size_t i = 0; i + 1 < changed.size(); ++i)
      c8.check(changed[i] > 0, fmt::format("iteration {} has gf_changed = 0 before the end", i + 1));
    c8.check(r.labeling == union_find_labels(g.num_vertices(), g.edge_list()), "labels differ from union-find");
    c8.detail = fmt::format("n={} m={} iterations={} run {:.2f}s (generate {:.2f}s)", g.num_vertices(),
                            g.num_edges(), r.iterations, run_seconds, gen_seconds);
  }

  int failed = 0;
  for (const Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8}) {
    const bool ok = c->failed_checks == 0;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", c->id, c->name.c_str(),
                c->detail.empty() ? "" : fmt::format(" [{}]", c->detail).c_str());
    for (const auto& f : c->failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
