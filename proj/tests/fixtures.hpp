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

// The graph suite shared by the property tests and the acceptance binary.
#pragma once

#include <string>
#include <vector>

#include <fmt/format.h>

#include "svcc/graph.hpp"
#include "svcc/graph_io.hpp"

namespace svcc::testing {

enum class FixtureKind { small_family, path, gnp, component_mix };

struct Fixture {
  std::string name;
  FixtureKind kind;
  std::size_t n;
  CsrGraph graph;
};

inline Fixture make_fixture(const io::GeneratorSpec& spec, FixtureKind kind, std::string name) {
  CsrGraph g = io::generate(spec);
  const std::size_t n = g.num_vertices();
  return {std::move(name), kind, n, std::move(g)};
}

/// path/cycle/star/complete for n = 1..64, grids up to 8x8, 60 G(n, p)
/// graphs (p in {0.002, 0.01, 0.05}, 20 seeds each, n cycling through
/// 250..2000), and component mixes of 2..50 blocks.
inline std::vector<Fixture> fixture_suite() {
  using io::Family;
  std::vector<Fixture> out;
  for (std::size_t n = 1; n <= 64; ++n) {
    for (Family fam : {Family::path, Family::cycle, Family::star, Family::complete}) {
      io::GeneratorSpec spec;
      spec.family = fam;
      spec.n = n;
      out.push_back(make_fixture(spec, fam == Family::path ? FixtureKind::path : FixtureKind::small_family,
                                 fmt::format("{}({})", io::to_string(fam), n)));
    }
  }
  for (std::size_t r = 1; r <= 8; ++r) {
    for (std::size_t c = r; c <= 8; ++c) {
      io::GeneratorSpec spec;
      spec.family = Family::grid2d;
      spec.rows = r;
      spec.cols = c;
      out.push_back(make_fixture(spec, FixtureKind::small_family, fmt::format("grid2d({}x{})", r, c)));
    }
  }
  const std::size_t gnp_sizes[] = {250, 500, 1000, 2000};
  for (double p : {0.002, 0.01, 0.05}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      io::GeneratorSpec spec;
      spec.family = Family::gnp;
      spec.n = gnp_sizes[seed % 4];
      spec.p = p;
      spec.seed = seed;
      out.push_back(make_fixture(spec, FixtureKind::gnp, fmt::format("gnp({},{},seed={})", spec.n, p, seed)));
    }
  }
  const std::size_t mix_blocks[] = {2, 3, 5, 8, 13, 20, 32, 50};
  for (std::size_t i = 0; i < std::size(mix_blocks); ++i) {
    io::GeneratorSpec spec;
    spec.family = Family::component_mix;
    spec.blocks = mix_blocks[i];
    spec.block_size = 10 + 7 * i;
    spec.p = 0.15;
    spec.seed = 100 + i;
    out.push_back(make_fixture(spec, FixtureKind::component_mix,
                               fmt::format("component_mix({}x{},seed={})", spec.blocks, spec.block_size, spec.seed)));
  }
  return out;
}

}  // namespace svcc::testing
