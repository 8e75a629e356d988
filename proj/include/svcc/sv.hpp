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
#include <string>
#include <string_view>
#include <vector>

#include "svcc/graph.hpp"

namespace svcc {

/// Which of the four convergence optimizations a FastSV run applies.
struct HookingConfig {
  bool grandparent_hooking = true;  // hook onto f[f[v]] instead of f[v]
  bool stochastic_hooking = true;   // drop the "f[u] is a root" guard
  bool aggressive_hooking = true;   // also lower f[u] itself
  bool early_termination = true;    // stop when f[f] is stable instead of f

  static HookingConfig all() { return {}; }
  static HookingConfig none() { return {false, false, false, false}; }
  /// Cumulative ablation level 1..5: level k turns on the first k-1
  /// optimizations in the order grandparent, stochastic, aggressive, early
  /// termination. Throws InputError outside [1, 5].
  static HookingConfig cumulative(int level);

  friend bool operator==(const HookingConfig&, const HookingConfig&) = default;
};

enum class KernelKind { none, dense, sparse };
std::string_view to_string(KernelKind kind);

struct IterationTrace {
  std::size_t iteration = 0;  // 1-based
  std::size_t gf_changed = 0;
  std::size_t f_changed = 0;
  KernelKind kernel = KernelKind::none;
  std::size_t frontier = 0;  // input entries fed to the matrix-vector kernel
  std::size_t flops = 0;
  double elapsed_seconds = 0.0;
};

struct RunOptions {
  int threads = 1;
  /// Check f[u] <= u and elementwise monotone descent on every committed
  /// iteration, and the star property on exit. Throws InvariantViolation.
  bool check_invariants = true;
  /// Keep a copy of f after every iteration in RunResult::snapshots.
  bool record_snapshots = false;
};

struct RunResult {
  Labeling labeling;
  std::size_t iterations = 0;
  std::vector<IterationTrace> trace;
  std::vector<ParentVector> snapshots;
};

/// Entry counts of one committed iteration.
struct StepCounts {
  std::size_t f_changed = 0;
  std::size_t gf_changed = 0;
};

/// One iteration of simplified SV: a root hooks onto the smallest smaller
/// neighbor parent f[v], and every vertex not pointing at a root jumps to its
/// grandparent. Both steps read the f committed by the previous iteration and
/// the result is committed once.
StepCounts simplified_sv_step(const CsrGraph& g, ParentVector& f, int threads = 1);

/// One FastSV iteration under `cfg`: hooking, aggressive hooking and
/// shortcutting all read f and fold into a single f_next, committed once.
/// `cfg.early_termination` has no effect on a single step.
StepCounts fastsv_step(const CsrGraph& g, const HookingConfig& cfg, ParentVector& f, int threads = 1);

/// Simplified Shiloach-Vishkin, iterated until f is stable.
RunResult simplified_sv(const CsrGraph& g, const RunOptions& opts = {});

/// FastSV with the optimizations selected in `cfg`.
///
/// Stopping on a stable f[f] is only known to be final when grandparent,
/// stochastic and aggressive hooking are all on. For any other configuration
/// with early_termination set, a stable f[f] ends the run only if f is
/// already a star forest with no edge between stars; otherwise iteration
/// continues.
RunResult fastsv(const CsrGraph& g, const HookingConfig& cfg, const RunOptions& opts = {});

/// True when f is a star forest and every edge joins two vertices of the same
/// star, i.e. f is a fixed point of every hooking configuration.
bool is_final_forest(const CsrGraph& g, const ParentVector& f);

/// Throws InvariantViolation unless next[u] <= prev[u] and next[u] <= u for
/// every u. `where` is included in the message.
void check_descent(const ParentVector& prev, const ParentVector& next, std::string_view where);

struct AblationEntry {
  std::string name;  // sv1 .. sv5
  RunResult result;
  double seconds = 0.0;
};

/// Runs sv1 (simplified SV) and sv2..sv5 (cumulative FastSV levels). Throws
/// InvariantViolation if the five labelings disagree.
std::vector<AblationEntry> ablation_suite(const CsrGraph& g, const RunOptions& opts = {});

}  // namespace svcc
