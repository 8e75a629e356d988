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

#include "svcc/sv.hpp"

#include <chrono>
#include <cstdint>
#include <string>

#include "parallel.hpp"
#include "svcc/errors.hpp"
#include "svcc/kernels.hpp"

namespace svcc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

enum class Stop { f_stable, gf_stable, gf_stable_certified };

template <typename Step>
RunResult iterate(const CsrGraph& g, const RunOptions& opts, Stop stop, Step&& step) {
  RunResult out;
  ParentVector f = identity_parents(g.num_vertices());
  ParentVector prev;
  for (std::size_t iter = 1;; ++iter) {
    if (opts.check_invariants) prev = f;
    const auto start = Clock::now();
    const StepCounts counts = step(f);
    IterationTrace row;
    row.iteration = iter;
    row.f_changed = counts.f_changed;
    row.gf_changed = counts.gf_changed;
    row.elapsed_seconds = seconds_since(start);
    out.trace.push_back(row);
    if (opts.check_invariants) check_descent(prev, f, "iteration " + std::to_string(iter));
    if (opts.record_snapshots) out.snapshots.push_back(f);
    if (stop == Stop::f_stable ? counts.f_changed == 0
                               : counts.gf_changed == 0 && (stop == Stop::gf_stable || is_final_forest(g, f)))
      break;
  }
  out.iterations = out.trace.size();
  out.labeling = labeling_from_parents(f);
  return out;
}

}  // namespace

HookingConfig HookingConfig::cumulative(int level) {
  if (level < 1 || level > 5) throw InputError("sv level must be in 1..5, got " + std::to_string(level));
  return {level >= 2, level >= 3, level >= 4, level >= 5};
}

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::dense: return "dense";
    case KernelKind::sparse: return "sparse";
    case KernelKind::none: break;
  }
  return "none";
}

void check_descent(const ParentVector& prev, const ParentVector& next, std::string_view where) {
  for (std::size_t u = 0; u < next.size(); ++u) {
    if (next[u] > u)
      throw InvariantViolation(std::string(where) + ": f[" + std::to_string(u) + "] = " + std::to_string(next[u]) +
                               " exceeds its vertex id");
    if (next[u] > prev[u])
      throw InvariantViolation(std::string(where) + ": f[" + std::to_string(u) + "] increased from " +
                               std::to_string(prev[u]) + " to " + std::to_string(next[u]));
  }
}

bool is_final_forest(const CsrGraph& g, const ParentVector& f) {
  for (VertexId u = 0; u < f.size(); ++u) {
    if (f[f[u]] != f[u]) return false;
    for (VertexId v : g.neighbors(u))
      if (f[v] != f[u]) return false;
  }
  return true;
}

StepCounts simplified_sv_step(const CsrGraph& g, ParentVector& f, int threads) {
  const std::size_t n = g.num_vertices();
  const auto rows = static_cast<std::int64_t>(n);
  const int workers = detail::workers_for(g.num_entries() + n, threads);
  const ParentVector gf = kernels::extract_grandparent(f, threads);

  // Both steps read the committed f and write f_next. Hooking only writes
  // roots and shortcutting only writes vertices whose parent is not a root,
  // so the two write sets are disjoint.
  ParentVector f_next = f;

  // Step 1: a root adjacent to a smaller parent hooks onto the smallest one.
#pragma omp parallel for num_threads(workers) schedule(dynamic, 256)
  for (std::int64_t u = 0; u < rows; ++u) {
    const VertexId pu = f[u];
    if (gf[u] != pu) continue;
    for (VertexId v : g.neighbors(static_cast<VertexId>(u)))
      if (f[v] < pu) detail::atomic_min(f_next[pu], f[v]);
  }

  // Step 2: shortcutting.
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t u = 0; u < rows; ++u)
    if (f[u] != gf[u]) f_next[u] = gf[u];

  StepCounts counts;
  counts.f_changed = kernels::count_diff(f, f_next, threads);
  counts.gf_changed = kernels::count_diff(gf, kernels::extract_grandparent(f_next, threads), threads);
  f.swap(f_next);
  return counts;
}

StepCounts fastsv_step(const CsrGraph& g, const HookingConfig& cfg, ParentVector& f, int threads) {
  const std::size_t n = g.num_vertices();
  const auto rows = static_cast<std::int64_t>(n);
  const int workers = detail::workers_for(g.num_entries() + n, threads);
  const ParentVector gf = kernels::extract_grandparent(f, threads);
  const std::span<const VertexId> source = cfg.grandparent_hooking ? std::span<const VertexId>(gf) : f;

  ParentVector f_next = f;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 256)
  for (std::int64_t u = 0; u < rows; ++u) {
    const VertexId pu = f[u];
    const bool may_hook_parent = cfg.stochastic_hooking || f[pu] == pu;
    for (VertexId v : g.neighbors(static_cast<VertexId>(u))) {
      const VertexId target = source[v];
      if (may_hook_parent) detail::atomic_min(f_next[pu], target);
      if (cfg.aggressive_hooking) detail::atomic_min(f_next[u], target);
    }
  }

  // Shortcutting folds into the same f_next; it runs after the edge pass so
  // no slot is written by two phases at once.
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t u = 0; u < rows; ++u)
    if (gf[u] < f_next[u]) f_next[u] = gf[u];

  StepCounts counts;
  counts.f_changed = kernels::count_diff(f, f_next, threads);
  counts.gf_changed = kernels::count_diff(gf, kernels::extract_grandparent(f_next, threads), threads);
  f.swap(f_next);
  return counts;
}

RunResult simplified_sv(const CsrGraph& g, const RunOptions& opts) {
  return iterate(g, opts, Stop::f_stable, [&](ParentVector& f) { return simplified_sv_step(g, f, opts.threads); });
}

RunResult fastsv(const CsrGraph& g, const HookingConfig& cfg, const RunOptions& opts) {
  Stop stop = Stop::f_stable;
  if (cfg.early_termination) {
    const bool proven = cfg.grandparent_hooking && cfg.stochastic_hooking && cfg.aggressive_hooking;
    stop = proven ? Stop::gf_stable : Stop::gf_stable_certified;
  }
  return iterate(g, opts, stop, [&](ParentVector& f) { return fastsv_step(g, cfg, f, opts.threads); });
}

std::vector<AblationEntry> ablation_suite(const CsrGraph& g, const RunOptions& opts) {
  std::vector<AblationEntry> out;
  for (int level = 1; level <= 5; ++level) {
    AblationEntry entry;
    entry.name = "sv" + std::to_string(level);
    const auto start = Clock::now();
    entry.result = level == 1 ? simplified_sv(g, opts) : fastsv(g, HookingConfig::cumulative(level), opts);
    entry.seconds = seconds_since(start);
    if (!out.empty() && entry.result.labeling != out.front().result.labeling)
      throw InvariantViolation("ablation: " + entry.name + " labeling differs from sv1");
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace svcc
