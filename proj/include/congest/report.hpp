// Copyright 2026 The Congest Subgraph Detection Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congest/property_tester.hpp"
#include "congest/sim.hpp"

namespace congest {

enum class ReportFormat { kText, kCsv, kJson };

/// Throws InvalidParams on anything but "text", "csv" or "json".
ReportFormat parse_report_format(std::string_view name);
const char* to_string(ReportFormat f);

struct ReportExtras {
  /// Appended after the standard fields, in order.
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<TrialRecord> trials;
  bool per_node = false;
  std::optional<double> wall_ms;
};

/// One run as "key: value" text, a one-row CSV table or a JSON object. The
/// layouts are described in docs/formats.md.
std::string render_report(const RunReport& report, const ReportExtras& extras, ReportFormat format);

struct SweepRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  Verdict decision = Verdict::kAccept;
  int rounds_used = 0;
  int logical_rounds = 0;
  std::size_t max_edge_bits = 0;
  int unit_bits = 1;
  double edge_bits_ratio = 0.0;
  std::optional<double> wall_ms;

  static SweepRow from(const RunReport& report);
};

struct SweepReport {
  std::vector<SweepRow> rows;  // sorted by (n, seed)
};

inline constexpr std::string_view kSweepCsvVersion = "congest-sweep v1";

std::string render_sweep(const SweepReport& sweep, ReportFormat format);

/// Plain key/value results in any format, for the smaller subcommands.
std::string render_fields(const std::vector<std::pair<std::string, std::string>>& fields,
                          ReportFormat format);

/// Fixed six-decimal rendering used everywhere in reports.
std::string format_double(double value);

}  // namespace congest
