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

#include "svcc/la_driver.hpp"

#include <chrono>
#include <string>

#include "svcc/errors.hpp"
#include "svcc/kernels.hpp"

namespace svcc {

KernelKind choose_kernel(std::size_t gf_changed, std::size_t n, const DriverConfig& cfg, bool first_iteration) {
  if (!(cfg.sparse_threshold >= 0.0 && cfg.sparse_threshold <= 1.0))
    throw InputError("sparse threshold must be in [0, 1], got " + std::to_string(cfg.sparse_threshold));
  switch (cfg.force_kernel) {
    case KernelMode::dense_only: return KernelKind::dense;
    case KernelMode::sparse_only: return KernelKind::sparse;
    case KernelMode::automatic: break;
  }
  if (first_iteration) return KernelKind::dense;
  return static_cast<double>(gf_changed) < cfg.sparse_threshold * static_cast<double>(n) ? KernelKind::sparse
                                                                                         : KernelKind::dense;
}

RunResult fastsv_la(const CsrGraph& g, const DriverConfig& cfg, const RunOptions& opts,
                    std::vector<ParentVector>* gf_snapshots) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n = g.num_vertices();
  const int threads = opts.threads;

  ParentVector f = identity_parents(n);
  ParentVector gf = f;          // f[f] of the identity
  ParentVector dup = gf;        // gf of the previous iteration
  ParentVector mngf = gf;       // accumulated min over neighbor grandparents
  ParentVector parent_idx = f;  // f captured alongside gf
  SparseDelta delta;            // gf - dup when the next product is sparse
  std::size_t gf_changed = n;

  RunResult out;
  ParentVector prev;
  for (std::size_t iter = 1;; ++iter) {
    const auto start = Clock::now();
    prev = f;

    IterationTrace row;
    row.iteration = iter;
    row.kernel = choose_kernel(gf_changed, n, cfg, iter == 1);

    // Step 1: stochastic hooking
    kernels::KernelStats stats;
    if (row.kernel == KernelKind::sparse) {
      if (iter == 1) delta = kernels::dense_as_delta(gf);
      row.frontier = delta.size();
      stats = kernels::mxspv_sel2nd_min_accum(g, delta, mngf, threads);
    } else {
      row.frontier = n;
      stats = kernels::mxv_sel2nd_min_accum(g, gf, mngf, threads);
    }
    row.flops = stats.flops;
    kernels::assign_min_scatter(f, parent_idx, mngf, threads);
    // Step 2: aggressive hooking
    kernels::ewise_min(f, mngf, threads);
    // Step 3: shortcutting
    kernels::ewise_min(f, gf, threads);
    // Step 4: grandparents
    gf = kernels::extract_grandparent(f, threads);
    parent_idx = f;
    // Step 5: termination
    gf_changed = kernels::count_diff(dup, gf, threads);
    if (gf_changed > 0 && choose_kernel(gf_changed, n, cfg) == KernelKind::sparse)
      delta = kernels::sparsify_changes(gf, dup);
    dup = gf;

    // The kernels' own counts overlap when one entry is lowered by several
    // steps, so f_changed is taken against the iteration's starting f.
    row.f_changed = kernels::count_diff(prev, f, threads);
    row.gf_changed = gf_changed;
    row.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.trace.push_back(row);

    if (opts.check_invariants) check_descent(prev, f, "iteration " + std::to_string(iter));
    if (opts.record_snapshots) {
      out.snapshots.push_back(f);
      if (gf_snapshots) gf_snapshots->push_back(gf);
    }
    if (gf_changed == 0) break;
  }
  out.iterations = out.trace.size();
  out.labeling = labeling_from_parents(f);
  return out;
}

}  // namespace svcc
