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
#include <span>
#include <vector>

#include "svcc/graph.hpp"

namespace svcc {

/// Sequential union-find with union by rank and path compression.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);

  VertexId find(VertexId x);
  /// Returns false if x and y were already in the same set.
  bool unite(VertexId x, VertexId y);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
};

/// Ground-truth labels from union-find, relabeled so each component carries
/// its minimum vertex id.
Labeling union_find_labels(std::size_t n, std::span<const Edge> edges);

/// Same contract as union_find_labels, computed by breadth-first search from
/// each unvisited vertex in increasing id order.
Labeling bfs_labels(const CsrGraph& g);

}  // namespace svcc
