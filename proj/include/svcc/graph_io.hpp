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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "svcc/graph.hpp"

namespace svcc::io {

/// Reads a Matrix Market coordinate file (pattern, integer or real values;
/// general or symmetric). Values are ignored and the pattern symmetrized.
/// A non-square matrix is read as a graph on max(rows, cols) vertices.
CsrGraph read_matrix_market(const std::filesystem::path& path);
CsrGraph read_matrix_market(std::istream& in);

/// Reads whitespace-separated 0-based vertex pairs, one per line. Lines
/// starting with '#' are comments, except "# vertices N", which declares at
/// least N vertices. Otherwise n = 1 + largest id seen.
CsrGraph read_edge_list(const std::filesystem::path& path);
CsrGraph read_edge_list(std::istream& in);

/// Writes each undirected edge once as "u v" with u < v, in row order. A
/// "# vertices N" line is emitted first only when trailing isolated vertices
/// would otherwise be lost.
void write_edge_list(const CsrGraph& g, std::ostream& out);
void write_edge_list(const CsrGraph& g, const std::filesystem::path& path);

enum class Family { path, cycle, star, complete, grid2d, gnp, component_mix };
std::string_view to_string(Family family);
/// Throws InputError for unknown names.
Family family_from_string(std::string_view name);

/// Parameters for the deterministic generators. Only the fields a family
/// uses are read:
///   path, cycle, star, complete: n
///   grid2d: rows, cols
///   gnp: n, p, seed
///   component_mix: blocks, block_size, p, seed
struct GeneratorSpec {
  Family family = Family::path;
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double p = 0.0;
  std::size_t blocks = 0;
  std::size_t block_size = 0;
  std::uint64_t seed = 0;
};

/// Builds the graph described by `spec`. Random families draw from
/// std::mt19937_64 seeded with `spec.seed`; the engine's output sequence is
/// fixed by the C++ standard, so a spec reproduces the same graph everywhere.
/// G(n, p) uses geometric skipping over the lower triangle, so cost is
/// proportional to the number of edges. component_mix draws `blocks`
/// independent G(block_size, p) blocks and then relabels all vertices with a
/// seeded Fisher-Yates permutation.
CsrGraph generate(const GeneratorSpec& spec);

}  // namespace svcc::io
