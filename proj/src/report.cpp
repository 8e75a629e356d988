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

#include "svcc/report.hpp"

#include <ostream>

#include <fmt/format.h>

namespace svcc::report {

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& row : report.trace) {
    trace.push_back({{"iteration", row.iteration},
                     {"gf_changed", row.gf_changed},
                     {"f_changed", row.f_changed},
                     {"kernel", std::string(to_string(row.kernel))},
                     {"frontier", row.frontier},
                     {"flops", row.flops},
                     {"elapsed_seconds", row.elapsed_seconds}});
  }
  return {{"schema", kReportSchema},
          {"graph", {{"n", report.n}, {"m", report.m}, {"source", report.source}}},
          {"algorithm", report.algorithm},
          {"config", report.config},
          {"threads", report.threads},
          {"component_count", report.component_count},
          {"iterations", report.iterations},
          {"trace", std::move(trace)},
          {"total_seconds", report.total_seconds},
          {"verified", report.verified}};
}

nlohmann::json without_timing(nlohmann::json report) {
  report.erase("total_seconds");
  report.erase("threads");
  if (report.contains("trace"))
    for (auto& row : report["trace"]) row.erase("elapsed_seconds");
  return report;
}

void write_ablation_csv(const std::vector<AblationEntry>& rows, std::ostream& out) {
  out << "config,iterations,seconds,reduction_vs_sv1\n";
  const double base = rows.empty() ? 0.0 : static_cast<double>(rows.front().result.iterations);
  for (const auto& row : rows) {
    const double reduction = base > 0 ? 1.0 - static_cast<double>(row.result.iterations) / base : 0.0;
    out << fmt::format("{},{},{:.6f},{:.4f}\n", row.name, row.result.iterations, row.seconds, reduction);
  }
}

void write_frontier_csv(const std::vector<IterationTrace>& trace, std::size_t n, std::ostream& out) {
  out << "iteration,gf_changed,gf_changed_fraction,kernel,flops,elapsed_seconds\n";
  for (const auto& row : trace) {
    const double fraction = n > 0 ? static_cast<double>(row.gf_changed) / static_cast<double>(n) : 0.0;
    out << fmt::format("{},{},{:.6f},{},{},{:.6f}\n", row.iteration, row.gf_changed, fraction, to_string(row.kernel),
                       row.flops, row.elapsed_seconds);
  }
}

void write_labels(const Labeling& labeling, std::ostream& out) {
  for (std::size_t u = 0; u < labeling.labels.size(); ++u) out << u << ' ' << labeling.labels[u] << '\n';
}

}  // namespace svcc::report
