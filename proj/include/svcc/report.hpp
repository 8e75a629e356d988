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
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "svcc/graph.hpp"
#include "svcc/sv.hpp"

// Machine-readable outputs. The JSON report and both CSV layouts are a
// stable interface; see README.md for the column and field lists.
namespace svcc::report {

inline constexpr const char* kReportSchema = "svcc.run_report/1";

struct RunReport {
  std::size_t n = 0;
  std::size_t m = 0;  // undirected edges
  std::string source;
  std::string algorithm;
  nlohmann::json config = nlohmann::json::object();
  int threads = 1;
  std::size_t component_count = 0;
  std::size_t iterations = 0;
  std::vector<IterationTrace> trace;
  double total_seconds = 0.0;
  bool verified = false;
};

nlohmann::json to_json(const RunReport& report);

/// Copy of a report with every wall-clock field and the thread count removed,
/// for comparing runs that should be identical.
nlohmann::json without_timing(nlohmann::json report);

/// config,iterations,seconds,reduction_vs_sv1
void write_ablation_csv(const std::vector<AblationEntry>& rows, std::ostream& out);

/// iteration,gf_changed,gf_changed_fraction,kernel,flops,elapsed_seconds
void write_frontier_csv(const std::vector<IterationTrace>& trace, std::size_t n, std::ostream& out);

/// One "vertex label" pair per line.
void write_labels(const Labeling& labeling, std::ostream& out);

}  // namespace svcc::report
