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

#include "svcc/kernels.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "svcc/errors.hpp"

namespace svcc::kernels {
namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw ContractViolation(std::string(what) + ": length " + std::to_string(got) + ", expected " +
                            std::to_string(want));
}

}  // namespace

KernelStats mxv_sel2nd_min_accum(const CsrGraph& A, std::span<const VertexId> x, std::span<VertexId> y,
                                 int threads) {
  const std::size_t n = A.num_vertices();
  require_length(x.size(), n, "mxv input");
  require_length(y.size(), n, "mxv output");

  const auto& offsets = A.row_offsets();
  const auto& cols = A.col_indices();
  std::size_t touched = 0;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(detail::workers_for(n, threads)) schedule(static) reduction(+ : touched)
  for (std::int64_t u = 0; u < rows; ++u) {
    const std::size_t begin = offsets[u], end = offsets[u + 1];
    if (begin == end) continue;
    VertexId best = y[u];
    for (std::size_t k = begin; k < end; ++k) best = std::min(best, x[cols[k]]);
    y[u] = best;
    ++touched;
  }
  return {touched, A.num_entries(), false};
}

KernelStats mxspv_sel2nd_min_accum(const CsrGraph& A, const SparseDelta& dx, std::span<VertexId> y,
                                   int threads) {
  const std::size_t n = A.num_vertices();
  require_length(y.size(), n, "mxspv output");
  for (std::size_t i = 0; i < dx.entries.size(); ++i) {
    const auto& e = dx.entries[i];
    if (e.index >= n) throw ContractViolation("mxspv: delta index " + std::to_string(e.index) + " out of range");
    if (i > 0 && dx.entries[i - 1].index >= e.index)
      throw ContractViolation("mxspv: delta indices not strictly increasing at position " + std::to_string(i));
  }

  std::vector<std::uint8_t> reached(n, 0);
  std::size_t flops = 0;
  std::size_t touched = 0;
  const auto count = static_cast<std::int64_t>(dx.entries.size());
  // Push each delta value to the rows that have it as a neighbor; A is
  // symmetric, so column v of A is row v.
#pragma omp parallel for num_threads(detail::workers_for(dx.entries.size(), threads)) schedule(dynamic, 64) \
    reduction(+ : flops, touched)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& e = dx.entries[static_cast<std::size_t>(i)];
    for (VertexId u : A.neighbors(e.index)) {
      detail::atomic_min(y[u], e.value);
      if (std::atomic_ref<std::uint8_t>(reached[u]).exchange(1, std::memory_order_relaxed) == 0) ++touched;
      ++flops;
    }
  }
  return {touched, flops, true};
}

ParentVector extract_grandparent(std::span<const VertexId> f, int threads) {
  const std::size_t n = f.size();
  ParentVector gf(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(detail::workers_for(n, threads)) schedule(static)
  for (std::int64_t u = 0; u < rows; ++u) gf[u] = f[f[u]];
  return gf;
}

std::size_t assign_min_scatter(std::span<VertexId> f, std::span<const VertexId> indices,
                               std::span<const VertexId> values, int threads) {
  require_length(values.size(), indices.size(), "assign values");
  const std::size_t n = f.size();
  for (VertexId t : indices)
    if (t >= n) throw ContractViolation("assign: target " + std::to_string(t) + " out of range");

  // A target may be lowered several times; count it once.
  std::vector<std::uint8_t> lowered(n, 0);
  std::size_t changed = 0;
  const auto count = static_cast<std::int64_t>(indices.size());
#pragma omp parallel for num_threads(detail::workers_for(indices.size(), threads)) schedule(static) \
    reduction(+ : changed)
  for (std::int64_t i = 0; i < count; ++i) {
    const VertexId t = indices[i];
    if (detail::atomic_min(f[t], values[i]) &&
        std::atomic_ref<std::uint8_t>(lowered[t]).exchange(1, std::memory_order_relaxed) == 0)
      ++changed;
  }
  return changed;
}

std::size_t ewise_min(std::span<VertexId> a, std::span<const VertexId> b, int threads) {
  require_length(b.size(), a.size(), "ewise_min");
  std::size_t changed = 0;
  const auto count = static_cast<std::int64_t>(a.size());
#pragma omp parallel for num_threads(detail::workers_for(a.size(), threads)) schedule(static) reduction(+ : changed)
  for (std::int64_t i = 0; i < count; ++i) {
    if (b[i] < a[i]) {
      a[i] = b[i];
      ++changed;
    }
  }
  return changed;
}

std::size_t count_diff(std::span<const VertexId> a, std::span<const VertexId> b, int threads) {
  require_length(b.size(), a.size(), "count_diff");
  std::size_t diff = 0;
  const auto count = static_cast<std::int64_t>(a.size());
#pragma omp parallel for num_threads(detail::workers_for(a.size(), threads)) schedule(static) reduction(+ : diff)
  for (std::int64_t i = 0; i < count; ++i) diff += a[i] != b[i] ? 1 : 0;
  return diff;
}

SparseDelta sparsify_changes(std::span<const VertexId> current, std::span<const VertexId> previous) {
  require_length(previous.size(), current.size(), "sparsify_changes");
  SparseDelta out;
  for (std::size_t i = 0; i < current.size(); ++i)
    if (current[i] != previous[i]) out.entries.push_back({i, current[i]});
  return out;
}

SparseDelta dense_as_delta(std::span<const VertexId> x) {
  SparseDelta out;
  out.entries.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.entries.push_back({i, x[i]});
  return out;
}

}  // namespace svcc::kernels
