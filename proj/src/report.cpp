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

#include "congest/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "congest/error.hpp"

namespace congest {

using Json = nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw InvalidParams("unknown report format '" + std::string(name) + "'");
}

const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::kText: return "text";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kJson: return "json";
  }
  return "?";
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

namespace {

std::vector<std::pair<std::string, std::string>> standard_fields(const RunReport& r) {
  return {
      {"algorithm", r.algorithm},
      {"decision", to_string(r.decision)},
      {"rounds_used", std::to_string(r.rounds_used)},
      {"logical_rounds", std::to_string(r.logical_rounds)},
      {"fragmentation_factor", format_double(r.fragmentation_factor())},
      {"max_edge_bits", std::to_string(r.max_edge_bits)},
      {"unit_bits", std::to_string(r.unit_bits)},
      {"edge_bits_ratio", format_double(r.edge_bits_ratio())},
      {"bits_per_edge_per_round", std::to_string(r.bits_per_edge_per_round)},
      {"total_bits", std::to_string(r.total_bits)},
      {"n", std::to_string(r.n)},
      {"m", std::to_string(r.m)},
      {"seed", std::to_string(r.seed)},
  };
}

std::string candidate_text(const TrialRecord& t) {
  if (!t.candidate) return "none";
  std::ostringstream out;
  out << "(" << t.candidate->x << "," << t.candidate->y << ")";
  return out.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_report(const RunReport& report, const ReportExtras& extras, ReportFormat format) {
  auto fields = standard_fields(report);
  fields.insert(fields.end(), extras.fields.begin(), extras.fields.end());
  if (extras.wall_ms) fields.emplace_back("wall_ms", format_double(*extras.wall_ms));

  std::ostringstream out;
  switch (format) {
    case ReportFormat::kText: {
      out << "format: congest-report v1\n";
      for (const auto& [key, value] : fields) out << key << ": " << value << "\n";
      for (const auto& t : extras.trials) {
        out << "trial: " << t.trial << " candidate=" << candidate_text(t)
            << " rank=" << (t.candidate ? std::to_string(t.candidate->rank) : "-")
            << " unique=" << (t.candidate && t.candidate->unique ? 1 : 0)
            << " verdict=" << to_string(t.verdict) << " rounds=" << t.rounds << "\n";
      }
      if (extras.per_node) {
        for (const auto& [id, verdict] : report.outputs) out << "output: " << id << " " << to_string(verdict) << "\n";
      }
      break;
    }
    case ReportFormat::kCsv: {
      out << "# congest-report v1\n";
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
      out << "\n";
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i].second);
      out << "\n";
      if (!extras.trials.empty()) {
        out << "trial,candidate_x,candidate_y,rank,unique,verdict,rounds\n";
        for (const auto& t : extras.trials) {
          out << t.trial << ",";
          if (t.candidate) {
            out << t.candidate->x << "," << t.candidate->y << "," << t.candidate->rank << ","
                << (t.candidate->unique ? 1 : 0);
          } else {
            out << ",,,";
          }
          out << "," << to_string(t.verdict) << "," << t.rounds << "\n";
        }
      }
      if (extras.per_node) {
        out << "node,output\n";
        for (const auto& [id, verdict] : report.outputs) out << id << "," << to_string(verdict) << "\n";
      }
      break;
    }
    case ReportFormat::kJson: {
      Json j;
      j["format"] = "congest-report v1";
      for (const auto& [key, value] : fields) j[key] = value;
      j["max_edge_bits_per_round"] = report.max_edge_bits_per_round;
      if (!extras.trials.empty()) {
        Json trials = Json::array();
        for (const auto& t : extras.trials) {
          Json row;
          row["trial"] = t.trial;
          if (t.candidate) {
            row["candidate"] = {t.candidate->x, t.candidate->y};
            row["rank"] = t.candidate->rank;
            row["unique"] = t.candidate->unique;
          }
          row["verdict"] = to_string(t.verdict);
          row["rounds"] = t.rounds;
          trials.push_back(row);
        }
        j["trials"] = trials;
      }
      if (extras.per_node) {
        Json outputs = Json::array();
        for (const auto& [id, verdict] : report.outputs) outputs.push_back({id, to_string(verdict)});
        j["outputs"] = outputs;
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

SweepRow SweepRow::from(const RunReport& report) {
  SweepRow row;
  row.algorithm = report.algorithm;
  row.n = report.n;
  row.m = report.m;
  row.seed = report.seed;
  row.decision = report.decision;
  row.rounds_used = report.rounds_used;
  row.logical_rounds = report.logical_rounds;
  row.max_edge_bits = report.max_edge_bits;
  row.unit_bits = report.unit_bits;
  row.edge_bits_ratio = report.edge_bits_ratio();
  return row;
}

std::string render_sweep(const SweepReport& sweep, ReportFormat format) {
  const bool timed = std::any_of(sweep.rows.begin(), sweep.rows.end(),
                                 [](const SweepRow& r) { return r.wall_ms.has_value(); });
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kCsv:
      out << "# " << kSweepCsvVersion << "\n";
      out << "algorithm,n,m,seed,decision,rounds_used,logical_rounds,max_edge_bits,unit_bits,edge_bits_ratio";
      if (timed) out << ",wall_ms";
      out << "\n";
      for (const auto& r : sweep.rows) {
        out << r.algorithm << "," << r.n << "," << r.m << "," << r.seed << "," << to_string(r.decision) << ","
            << r.rounds_used << "," << r.logical_rounds << "," << r.max_edge_bits << "," << r.unit_bits << ","
            << format_double(r.edge_bits_ratio);
        if (timed) out << "," << (r.wall_ms ? format_double(*r.wall_ms) : "");
        out << "\n";
      }
      break;
    case ReportFormat::kText:
      out << "format: " << kSweepCsvVersion << "\n";
      out << "rows: " << sweep.rows.size() << "\n";
      for (const auto& r : sweep.rows) {
        out << "row: algorithm=" << r.algorithm << " n=" << r.n << " m=" << r.m << " seed=" << r.seed
            << " decision=" << to_string(r.decision) << " rounds_used=" << r.rounds_used
            << " max_edge_bits=" << r.max_edge_bits << " edge_bits_ratio=" << format_double(r.edge_bits_ratio);
        if (r.wall_ms) out << " wall_ms=" << format_double(*r.wall_ms);
        out << "\n";
      }
      break;
    case ReportFormat::kJson: {
      Json j;
      j["format"] = kSweepCsvVersion;
      Json rows = Json::array();
      for (const auto& r : sweep.rows) {
        Json row;
        row["algorithm"] = r.algorithm;
        row["n"] = r.n;
        row["m"] = r.m;
        row["seed"] = r.seed;
        row["decision"] = to_string(r.decision);
        row["rounds_used"] = r.rounds_used;
        row["logical_rounds"] = r.logical_rounds;
        row["max_edge_bits"] = r.max_edge_bits;
        row["unit_bits"] = r.unit_bits;
        row["edge_bits_ratio"] = format_double(r.edge_bits_ratio);
        if (r.wall_ms) row["wall_ms"] = format_double(*r.wall_ms);
        rows.push_back(row);
      }
      j["rows"] = rows;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_fields(const std::vector<std::pair<std::string, std::string>>& fields,
                          ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kText:
      for (const auto& [key, value] : fields) out << key << ": " << value << "\n";
      break;
    case ReportFormat::kCsv:
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
      out << "\n";
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i].second);
      out << "\n";
      break;
    case ReportFormat::kJson: {
      Json j = Json::object();
      for (const auto& [key, value] : fields) j[key] = value;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace congest
