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

#include "svcc/oracle.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "svcc/errors.hpp"

namespace svcc {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId DisjointSet::find(VertexId x) {
  VertexId root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const VertexId next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSet::unite(VertexId x, VertexId y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

Labeling union_find_labels(std::size_t n, std::span<const Edge> edges) {
  DisjointSet sets(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    sets.unite(u, v);
  }
  // Roots are arbitrary; the first vertex seen for each root is its minimum.
  constexpr VertexId unset = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> min_of_root(n, unset);
  Labeling out;
  out.labels.resize(n);
  for (VertexId u = 0; u < n; ++u) {
    VertexId& rep = min_of_root[sets.find(u)];
    if (rep == unset) {
      rep = u;
      ++out.component_count;
    }
    out.labels[u] = rep;
    ++out.sizes[rep];
  }
  return out;
}

Labeling bfs_labels(const CsrGraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr VertexId unset = std::numeric_limits<VertexId>::max();
  Labeling out;
  out.labels.assign(n, unset);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId source = 0; source < n; ++source) {
    if (out.labels[source] != unset) continue;
    ++out.component_count;
    out.labels[source] = source;
    queue.clear();
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId v : g.neighbors(queue[head])) {
        if (out.labels[v] != unset) continue;
        out.labels[v] = source;
        queue.push_back(v);
      }
    }
    out.sizes[source] = queue.size();
  }
  return out;
}

}  // namespace svcc
