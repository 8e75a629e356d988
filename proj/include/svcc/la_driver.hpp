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

#pragma once

#include <cstddef>

#include "svcc/graph.hpp"
#include "svcc/sv.hpp"

namespace svcc {

enum class KernelMode { automatic, dense_only, sparse_only };

struct DriverConfig {
  /// Auto mode uses the sparse-input product when fewer than
  /// sparse_threshold * n grandparents changed in the previous iteration.
  double sparse_threshold = 0.1;
  KernelMode force_kernel = KernelMode::automatic;
};

/// Kernel for the coming iteration given how many grandparent entries changed
/// in the previous one. `first_iteration` forces dense in auto mode.
/// Throws InputError if the threshold is outside [0, 1].
KernelKind choose_kernel(std::size_t gf_changed, std::size_t n, const DriverConfig& cfg,
                         bool first_iteration = false);

/// FastSV written purely in vector kernels. Each iteration:
///   mngf  <-min A * gf               (dense, or sparse over the gf delta)
///   f[idx] <-min mngf                (idx = f as of the previous iteration)
///   f     <-min mngf
///   f     <-min gf
///   gf    <- f[f], idx <- f
/// and stops when gf equals its value from the previous iteration.
/// mngf is never reset, so it carries the minima of all earlier products.
///
/// With record_snapshots, RunResult::snapshots holds f after every iteration
/// and `gf_snapshots` (if non-null) receives gf after every iteration.
RunResult fastsv_la(const CsrGraph& g, const DriverConfig& cfg = {}, const RunOptions& opts = {},
                    std::vector<ParentVector>* gf_snapshots = nullptr);

}  // namespace svcc
