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

#include "svcc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "svcc/errors.hpp"

namespace svcc::io {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_u64(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

CsrGraph read_matrix_market(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_matrix_market(in);
}

CsrGraph read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty file, expected %%MatrixMarket header");
  ++line_no;

  const auto header = split_ws(line);
  if (header.size() != 5 || header[0] != "%%MatrixMarket")
    throw ParseError(line_no, "malformed header, expected '%%MatrixMarket matrix <format> <field> <symmetry>'");
  if (lower(header[1]) != "matrix") throw ParseError(line_no, "unsupported object '" + std::string(header[1]) + "'");
  const std::string format = lower(header[2]);
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  if (format == "array") throw UnsupportedFormat("line 1: dense array Matrix Market files are not supported");
  if (format != "coordinate") throw ParseError(line_no, "unknown format '" + std::string(header[2]) + "'");
  if (field != "pattern" && field != "integer" && field != "real")
    throw UnsupportedFormat("line 1: unsupported field '" + std::string(header[3]) + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw UnsupportedFormat("line 1: unsupported symmetry '" + std::string(header[4]) + "'");
  const std::size_t values_per_entry = field == "pattern" ? 0 : 1;

  bool have_size = false;
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line.front() == '%') continue;
    const auto tokens = split_ws(line);
    if (!have_size) {
      if (tokens.size() != 3) throw ParseError(line_no, "expected size line '<rows> <cols> <entries>'");
      rows = parse_u64(tokens[0], line_no);
      cols = parse_u64(tokens[1], line_no);
      nnz = parse_u64(tokens[2], line_no);
      have_size = true;
      edges.reserve(nnz);
      continue;
    }
    if (tokens.size() != 2 + values_per_entry)
      throw ParseError(line_no, "expected " + std::to_string(2 + values_per_entry) + " fields, got " +
                                    std::to_string(tokens.size()));
    if (edges.size() == nnz) throw ParseError(line_no, "more entries than the declared " + std::to_string(nnz));
    const std::uint64_t i = parse_u64(tokens[0], line_no);
    const std::uint64_t j = parse_u64(tokens[1], line_no);
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError(line_no, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside declared " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    edges.emplace_back(i - 1, j - 1);
  }
  if (!have_size) throw ParseError(line_no, "missing size line");
  if (edges.size() != nnz)
    throw ParseError(line_no, "declared " + std::to_string(nnz) + " entries, found " + std::to_string(edges.size()));
  return build_csr(std::max(rows, cols), edges);
}

CsrGraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

CsrGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.front().front() == '#') {
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "vertices")
        n = std::max<std::size_t>(n, parse_u64(tokens[2], line_no));
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(tokens.size()));
    const VertexId u = parse_u64(tokens[0], line_no);
    const VertexId v = parse_u64(tokens[1], line_no);
    n = std::max<std::size_t>(n, std::max(u, v) + 1);
    edges.emplace_back(u, v);
  }
  return build_csr(n, edges);
}

void write_edge_list(const CsrGraph& g, std::ostream& out) {
  const auto edges = g.edge_list();
  VertexId top = 0;
  for (const auto& [u, v] : edges) top = std::max(top, v + 1);
  if (top != g.num_vertices()) out << "# vertices " << g.num_vertices() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edge_list(const CsrGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_edge_list(g, out);
  if (!out) throw InputError("write failed: " + path.string());
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::grid2d: return "grid2d";
    case Family::gnp: return "gnp";
    case Family::component_mix: return "component_mix";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::complete, Family::grid2d, Family::gnp,
                   Family::component_mix})
    if (to_string(f) == name) return f;
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Appends G(n, p) edges over vertex ids offset .. offset+n-1.
void append_gnp(std::size_t n, double p, std::size_t offset, std::mt19937_64& rng, std::vector<Edge>& edges) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::size_t v = 1; v < n; ++v)
      for (std::size_t w = 0; w < v; ++w) edges.emplace_back(offset + v, offset + w);
    return;
  }
  const double log_q = std::log1p(-p);
  std::size_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = unit_interval(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= static_cast<std::int64_t>(v) && v < n) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n) edges.emplace_back(offset + v, offset + static_cast<std::size_t>(w));
  }
}

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw InputError(std::string(what) + " must be positive");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must be in [0, 1], got " + std::to_string(p));
}

}  // namespace

CsrGraph generate(const GeneratorSpec& spec) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::path:
      require_positive(spec.n, "n");
      for (std::size_t u = 0; u + 1 < spec.n; ++u) edges.emplace_back(u, u + 1);
      return build_csr(spec.n, edges);
    case Family::cycle:
      require_positive(spec.n, "n");
      for (std::size_t u = 0; u + 1 < spec.n; ++u) edges.emplace_back(u, u + 1);
      if (spec.n > 2) edges.emplace_back(spec.n - 1, 0);
      return build_csr(spec.n, edges);
    case Family::star:
      require_positive(spec.n, "n");
      for (std::size_t u = 1; u < spec.n; ++u) edges.emplace_back(0, u);
      return build_csr(spec.n, edges);
    case Family::complete:
      require_positive(spec.n, "n");
      for (std::size_t u = 0; u < spec.n; ++u)
        for (std::size_t v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      return build_csr(spec.n, edges);
    case Family::grid2d: {
      require_positive(spec.rows, "rows");
      require_positive(spec.cols, "cols");
      for (std::size_t r = 0; r < spec.rows; ++r) {
        for (std::size_t c = 0; c < spec.cols; ++c) {
          const std::size_t u = r * spec.cols + c;
          if (c + 1 < spec.cols) edges.emplace_back(u, u + 1);
          if (r + 1 < spec.rows) edges.emplace_back(u, u + spec.cols);
        }
      }
      return build_csr(spec.rows * spec.cols, edges);
    }
    case Family::gnp: {
      require_positive(spec.n, "n");
      require_probability(spec.p);
      std::mt19937_64 rng(spec.seed);
      append_gnp(spec.n, spec.p, 0, rng, edges);
      return build_csr(spec.n, edges);
    }
    case Family::component_mix: {
      require_positive(spec.blocks, "blocks");
      require_positive(spec.block_size, "block_size");
      require_probability(spec.p);
      std::mt19937_64 rng(spec.seed);
      const std::size_t n = spec.blocks * spec.block_size;
      for (std::size_t b = 0; b < spec.blocks; ++b) append_gnp(spec.block_size, spec.p, b * spec.block_size, rng, edges);
      std::vector<VertexId> relabel = identity_parents(n);
      // modulo draw: a negligible bias, but identical on every platform
      for (std::size_t i = n; i > 1; --i) std::swap(relabel[i - 1], relabel[rng() % i]);
      for (auto& [u, v] : edges) {
        u = relabel[u];
        v = relabel[v];
      }
      return build_csr(n, edges);
    }
  }
  throw InputError("unknown graph family");
}

}  // namespace svcc::io
