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
#include <span>

#include "svcc/graph.hpp"

// Vector primitives over the (select2nd, min) semiring. Every kernel that
// writes an output folds into it with min, so results are independent of the
// processing order and of the worker count.
namespace svcc::kernels {

struct KernelStats {
  std::size_t rows_touched = 0;
  std::size_t flops = 0;
  bool used_sparse_input = false;
};

/// y[u] = min(y[u], min_{v in N(u)} x[v]). Rows with no neighbors keep y[u].
/// flops is always A.num_entries().
KernelStats mxv_sel2nd_min_accum(const CsrGraph& A, std::span<const VertexId> x, std::span<VertexId> y,
                                 int threads = 1);

/// Same product with a sparse input: only neighbors of dx's indices are
/// updated. dx indices must be strictly increasing and in range.
KernelStats mxspv_sel2nd_min_accum(const CsrGraph& A, const SparseDelta& dx, std::span<VertexId> y,
                                   int threads = 1);

/// gf[u] = f[f[u]].
ParentVector extract_grandparent(std::span<const VertexId> f, int threads = 1);

/// f[indices[i]] = min(f[indices[i]], values[i]) for every i; repeated targets
/// fold with min. Returns how many entries of f strictly decreased.
std::size_t assign_min_scatter(std::span<VertexId> f, std::span<const VertexId> indices,
                               std::span<const VertexId> values, int threads = 1);

/// a[i] = min(a[i], b[i]). Returns how many entries strictly decreased.
std::size_t ewise_min(std::span<VertexId> a, std::span<const VertexId> b, int threads = 1);

/// Number of positions where a and b differ.
std::size_t count_diff(std::span<const VertexId> a, std::span<const VertexId> b, int threads = 1);

/// Entries of `current` that differ from `previous`, in index order.
SparseDelta sparsify_changes(std::span<const VertexId> current, std::span<const VertexId> previous);

/// Every entry of x, as a delta against nothing.
SparseDelta dense_as_delta(std::span<const VertexId> x);

}  // namespace svcc::kernels
