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

#include "svcc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "svcc/errors.hpp"

namespace svcc {

CsrGraph::CsrGraph(std::vector<std::size_t> row_offsets, std::vector<VertexId> col_indices)
    : row_offsets_(std::move(row_offsets)), col_indices_(std::move(col_indices)) {
  if (row_offsets_.empty() || row_offsets_.front() != 0 || row_offsets_.back() != col_indices_.size())
    throw InputError("csr: row offsets must start at 0 and end at the entry count");
  const std::size_t n = row_offsets_.size() - 1;
  for (std::size_t u = 0; u < n; ++u) {
    if (row_offsets_[u] > row_offsets_[u + 1]) throw InputError("csr: row offsets decrease at row " + std::to_string(u));
    auto row = neighbors(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= n) throw InputError("csr: neighbor out of range in row " + std::to_string(u));
      if (row[k] == u) throw InputError("csr: self-loop at vertex " + std::to_string(u));
      if (k > 0 && row[k - 1] >= row[k]) throw InputError("csr: row " + std::to_string(u) + " not strictly increasing");
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (VertexId v : neighbors(u)) {
      auto back = neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), static_cast<VertexId>(u)))
        throw InputError("csr: missing reverse entry for (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }
}

std::vector<Edge> CsrGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

CsrGraph build_csr(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  std::exclusive_scan(degree.begin(), degree.end(), offsets.begin(), std::size_t{0});
  std::vector<VertexId> cols(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    cols[cursor[u]++] = v;
    cols[cursor[v]++] = u;
  }

  // sort + dedup each row, compacting in place
  std::vector<std::size_t> compact(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t u = 0; u < n; ++u) {
    auto first = cols.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
    auto last = cols.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    compact[u] = write;
    write = static_cast<std::size_t>(std::move(first, last, cols.begin() + static_cast<std::ptrdiff_t>(write)) -
                                     cols.begin());
  }
  compact[n] = write;
  cols.resize(write);
  cols.shrink_to_fit();
  return CsrGraph(std::move(compact), std::move(cols));
}

Labeling labeling_from_parents(const ParentVector& f) {
  Labeling out;
  out.labels = f;
  for (std::size_t u = 0; u < f.size(); ++u) {
    if (f[u] >= f.size() || f[f[u]] != f[u])
      throw InvariantViolation("algorithm terminated on non-star forest (vertex " + std::to_string(u) + ")");
    if (f[u] == u) ++out.component_count;
    ++out.sizes[f[u]];
  }
  return out;
}

ParentVector identity_parents(std::size_t n) {
  ParentVector f(n);
  std::iota(f.begin(), f.end(), VertexId{0});
  return f;
}

}  // namespace svcc
