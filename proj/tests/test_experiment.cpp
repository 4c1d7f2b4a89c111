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

#include <filesystem>
#include <fstream>
#include <set>

#include "congest/c4_detection.hpp"
#include "congest/experiment.hpp"
#include "congest/generators.hpp"
#include "congest/oracle.hpp"

using namespace congest;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("congest_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string p3_file() { return write_temp("p3.pattern", write_pattern(RootedPattern::centered(3, {{1, 2}, {2, 3}}))); }

}  // namespace

TEST(Experiment, ParseLists) {
  EXPECT_EQ(parse_u64_list("0..3"), (std::vector<std::uint64_t>{0, 1, 2, 3}));
  EXPECT_EQ(parse_u64_list("5,1,7"), (std::vector<std::uint64_t>{5, 1, 7}));
  EXPECT_EQ(parse_u64_list("4"), (std::vector<std::uint64_t>{4}));
  EXPECT_THROW(parse_u64_list("3..1"), InvalidParams);
  EXPECT_THROW(parse_u64_list("a"), InvalidParams);
}

TEST(Experiment, Names) {
  EXPECT_EQ(parse_algorithm("test-h"), Algorithm::kTester);
  EXPECT_STREQ(to_string(Algorithm::kC4), "c4");
  EXPECT_EQ(parse_generator("far"), GeneratorKind::kFar);
  EXPECT_THROW(parse_algorithm("nope"), InvalidParams);
}

TEST(Experiment, Validation) {
  ExperimentConfig cfg;
  EXPECT_THROW(cfg.validate(), InvalidParams);  // tree algorithms need a pattern
  cfg.pattern_file = p3_file();
  EXPECT_NO_THROW(cfg.validate());
  cfg.pattern_file = "/nonexistent/p.pattern";
  EXPECT_THROW(cfg.validate(), InvalidParams);
  ExperimentConfig tester;
  tester.algorithm = Algorithm::kTester;
  tester.pattern_file = write_temp("c4.pattern", write_pattern(c4_h_pattern()));
  tester.eps = 0.0;
  EXPECT_THROW(tester.validate(), InvalidParams);
  tester.eps = 0.3;
  EXPECT_NO_THROW(tester.validate());
  ExperimentConfig c4;
  c4.algorithm = Algorithm::kC4;
  EXPECT_NO_THROW(c4.validate());
}

TEST(Experiment, TreeRoundsFlatAcrossN) {
  ExperimentConfig cfg;
  cfg.pattern_file = p3_file();
  cfg.generator = GeneratorKind::kComponent;
  cfg.n_values = {20, 40, 80};
  cfg.seeds = {0, 1};
  const SweepReport sweep = run_experiment(cfg);
  ASSERT_EQ(sweep.rows.size(), 6u);
  std::set<int> rounds;
  for (const auto& row : sweep.rows) {
    EXPECT_EQ(row.decision, Verdict::kAccept);
    rounds.insert(row.rounds_used);
  }
  EXPECT_EQ(rounds.size(), 1u);
  EXPECT_EQ(sweep.rows[0].n, 20u);
  EXPECT_EQ(sweep.rows[1].seed, 1u);
}

TEST(Experiment, PlantedCopiesAreFound) {
  ExperimentConfig cfg;
  cfg.pattern_file = p3_file();
  cfg.generator = GeneratorKind::kPlanted;
  cfg.degree = 0.5;
  cfg.n_values = {16, 32};
  cfg.seeds = parse_u64_list("0..4");
  for (const auto& row : run_experiment(cfg).rows) EXPECT_EQ(row.decision, Verdict::kReject);
}

TEST(Experiment, C4SweepMatchesOracle) {
  ExperimentConfig cfg;
  cfg.algorithm = Algorithm::kC4;
  cfg.n_values = {10, 20};
  cfg.seeds = parse_u64_list("0..9");
  const SweepReport sweep = run_experiment(cfg);
  const PatternGraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  for (const auto& row : sweep.rows) {
    const Graph g = sweep_graph(cfg, row.n, row.seed);
    EXPECT_EQ(row.decision == Verdict::kReject, contains_subgraph(g, c4));
    EXPECT_EQ(row.logical_rounds, static_cast<int>(c4_threshold(row.n)) + 3);
  }
}

TEST(Experiment, DeterministicAcrossRuns) {
  ExperimentConfig cfg;
  cfg.algorithm = Algorithm::kTester;
  cfg.pattern_file = write_temp("c4b.pattern", write_pattern(c4_h_pattern()));
  cfg.generator = GeneratorKind::kFar;
  cfg.eps = 0.2;
  cfg.n_values = {24};
  cfg.seeds = {0, 1, 2};
  const std::string a = render_sweep(run_experiment(cfg), ReportFormat::kCsv);
  const std::string b = render_sweep(run_experiment(cfg), ReportFormat::kCsv);
  EXPECT_EQ(a, b);
  for (const auto& row : run_experiment(cfg).rows) EXPECT_EQ(row.decision, Verdict::kReject);
}

TEST(Experiment, TimingIsOptIn) {
  ExperimentConfig cfg;
  cfg.algorithm = Algorithm::kC4;
  cfg.n_values = {8};
  EXPECT_FALSE(run_experiment(cfg).rows[0].wall_ms.has_value());
  cfg.timing = true;
  EXPECT_TRUE(run_experiment(cfg).rows[0].wall_ms.has_value());
}
