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
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace svcc {

/// 0-based vertex identifier. 64 bits so that graphs beyond 2^32 vertices fit.
using VertexId = std::uint64_t;

/// Parent pointers of the pointer graph: f[u] is the parent of u. Also used
/// for grandparents, accumulated minima, and final labels.
using ParentVector = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

/// Undirected graph in compressed-sparse-row form.
///
/// Both orientations of every edge are stored, rows are sorted and free of
/// duplicates and self-loops. Immutable once built.
class CsrGraph {
 public:
  CsrGraph() : row_offsets_(1, 0) {}

  /// Takes ownership of prebuilt arrays and validates every invariant;
  /// throws InputError when they do not hold.
  CsrGraph(std::vector<std::size_t> row_offsets, std::vector<VertexId> col_indices);

  std::size_t num_vertices() const { return row_offsets_.size() - 1; }
  /// Number of stored adjacency entries (twice the undirected edge count).
  std::size_t num_entries() const { return col_indices_.size(); }
  std::size_t num_edges() const { return col_indices_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId u) const {
    return {col_indices_.data() + row_offsets_[u], col_indices_.data() + row_offsets_[u + 1]};
  }
  std::size_t degree(VertexId u) const { return row_offsets_[u + 1] - row_offsets_[u]; }

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<VertexId>& col_indices() const { return col_indices_; }

  /// Each undirected edge once, as (u, v) with u < v, in row order.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

 private:
  std::vector<std::size_t> row_offsets_;
  std::vector<VertexId> col_indices_;
};

/// Symmetrizes, deduplicates and drops self-loops. Throws InputError naming
/// the first pair with an endpoint outside [0, n).
CsrGraph build_csr(std::size_t n, std::span<const Edge> edges);

/// Final component assignment: each vertex labeled with the minimum vertex id
/// of its component.
struct Labeling {
  std::vector<VertexId> labels;
  std::size_t component_count = 0;
  std::map<VertexId, std::size_t> sizes;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Builds a Labeling from a terminated parent vector. The vector must be a
/// star forest (f[f[u]] == f[u]); otherwise throws InvariantViolation.
Labeling labeling_from_parents(const ParentVector& f);

/// Sparse vector of (index, value) pairs with strictly increasing indices.
struct SparseDelta {
  struct Entry {
    VertexId index;
    VertexId value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  friend bool operator==(const SparseDelta&, const SparseDelta&) = default;
};

/// f_0[u] = u.
ParentVector identity_parents(std::size_t n);

}  // namespace svcc
