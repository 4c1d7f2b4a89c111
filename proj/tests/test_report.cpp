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

#include <gtest/gtest.h>

#include <json.hpp>

#include "congest/error.hpp"
#include "congest/generators.hpp"
#include "congest/report.hpp"
#include "congest/tree_detection.hpp"

using namespace congest;

namespace {

RunReport sample() {
  return deterministic_tree_detection(path_graph(6), RootedPattern::centered(3, {{1, 2}, {2, 3}}));
}

}  // namespace

TEST(Report, FormatNames) {
  EXPECT_EQ(parse_report_format("text"), ReportFormat::kText);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_THROW(parse_report_format("xml"), InvalidParams);
  EXPECT_STREQ(to_string(ReportFormat::kCsv), "csv");
}

TEST(Report, DoublesHaveSixDecimals) {
  EXPECT_EQ(format_double(1.0), "1.000000");
  EXPECT_EQ(format_double(2.0 / 3.0), "0.666667");
}

TEST(Report, TextLayout) {
  const RunReport r = sample();
  ReportExtras extras;
  extras.fields = {{"pattern", "p3"}};
  extras.per_node = true;
  const std::string text = render_report(r, extras, ReportFormat::kText);
  EXPECT_EQ(text.rfind("format: congest-report v1\nalgorithm: det-tree\ndecision: reject\n", 0), 0u);
  EXPECT_NE(text.find("\npattern: p3\n"), std::string::npos);
  EXPECT_NE(text.find("\noutput: 0 "), std::string::npos);
  EXPECT_EQ(text.find("wall_ms"), std::string::npos);
}

TEST(Report, CsvHasMatchingHeaderAndRow) {
  const std::string csv = render_report(sample(), {}, ReportFormat::kCsv);
  std::istringstream in(csv);
  std::string version, header, row;
  std::getline(in, version);
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(version, "# congest-report v1");
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
  EXPECT_EQ(header.rfind("algorithm,decision,rounds_used", 0), 0u);
}

TEST(Report, JsonParsesBack) {
  ReportExtras extras;
  TrialRecord t;
  t.trial = 3;
  t.candidate = CandidateSelection{4, 2, 17, true};
  t.verdict = Verdict::kReject;
  t.rounds = 12;
  extras.trials = {t};
  extras.wall_ms = 1.5;
  const auto j = nlohmann::json::parse(render_report(sample(), extras, ReportFormat::kJson));
  EXPECT_EQ(j["format"], "congest-report v1");
  EXPECT_EQ(j["decision"], "reject");
  EXPECT_EQ(j["wall_ms"], "1.500000");
  EXPECT_EQ(j["trials"][0]["candidate"], nlohmann::json::array({4, 2}));
  EXPECT_EQ(j["trials"][0]["verdict"], "reject");
}

TEST(Report, TrialLines) {
  ReportExtras extras;
  TrialRecord t;
  t.trial = 0;
  t.candidate = CandidateSelection{1, 0, 9, false};
  t.rounds = 5;
  extras.trials = {t};
  const std::string text = render_report(sample(), extras, ReportFormat::kText);
  EXPECT_NE(text.find("trial: 0 candidate=(1,0) rank=9 unique=0 verdict=accept rounds=5\n"), std::string::npos);
}

TEST(Report, SameRunSameBytes) {
  for (ReportFormat f : {ReportFormat::kText, ReportFormat::kCsv, ReportFormat::kJson}) {
    EXPECT_EQ(render_report(sample(), {}, f), render_report(sample(), {}, f));
  }
}

TEST(Report, SweepCsv) {
  SweepReport sweep;
  sweep.rows.push_back(SweepRow::from(sample()));
  const std::string csv = render_sweep(sweep, ReportFormat::kCsv);
  EXPECT_EQ(csv.rfind("# congest-sweep v1\nalgorithm,n,m,seed,decision,", 0), 0u);
  EXPECT_EQ(csv.find("wall_ms"), std::string::npos);
  sweep.rows[0].wall_ms = 2.0;
  EXPECT_NE(render_sweep(sweep, ReportFormat::kCsv).find(",wall_ms\n"), std::string::npos);
}

TEST(Report, Fields) {
  const std::vector<std::pair<std::string, std::string>> f{{"a", "1"}, {"b", "x,y"}};
  EXPECT_EQ(render_fields(f, ReportFormat::kText), "a: 1\nb: x,y\n");
  EXPECT_EQ(render_fields(f, ReportFormat::kCsv), "a,b\n1,\"x,y\"\n");
}
