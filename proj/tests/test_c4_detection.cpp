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

#include <algorithm>

#include "congest/c4_detection.hpp"
#include "congest/generators.hpp"
#include "congest/oracle.hpp"

using namespace congest;

namespace {

const PatternGraph kC4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};

std::vector<C4State> final_states(const Graph& g, RunReport* report = nullptr) {
  std::vector<C4State> states(g.node_count());
  RunOptions options;
  options.observer = [&](int, NodeIndex v, const NodeProcess& p) {
    states[v] = dynamic_cast<const C4StateHolder&>(p).c4_state();
  };
  const RunReport r = detect_c4(g, options);
  if (report) *report = r;
  return states;
}

}  // namespace

TEST(C4, Threshold) {
  EXPECT_EQ(c4_threshold(1), 2u);
  EXPECT_EQ(c4_threshold(8), 4u);
  EXPECT_EQ(c4_threshold(50), 10u);
  EXPECT_EQ(c4_threshold(51), 11u);
}

TEST(C4, Examples) {
  EXPECT_EQ(detect_c4(cycle_graph(4)).decision, Verdict::kReject);
  EXPECT_EQ(detect_c4(path_graph(10)).decision, Verdict::kAccept);
  EXPECT_EQ(detect_c4(star_graph(9)).decision, Verdict::kAccept);
  EXPECT_EQ(detect_c4(complete_graph(4)).decision, Verdict::kReject);
  EXPECT_EQ(detect_c4(cycle_graph(5)).decision, Verdict::kAccept);
  EXPECT_EQ(detect_c4(petersen_graph()).decision, Verdict::kAccept);
}

TEST(C4, CompleteBipartiteUsesSharedNeighbors) {
  RunReport report;
  const auto states = final_states(complete_bipartite(2, 3), &report);
  EXPECT_EQ(report.decision, Verdict::kReject);
  EXPECT_TRUE(std::any_of(states.begin(), states.end(), [](const C4State& s) { return s.s_rule; }));
  EXPECT_TRUE(std::none_of(states.begin(), states.end(), [](const C4State& s) { return s.degree_rule; }));
}

TEST(C4, MatchesOracleOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      EXPECT_EQ(detect_c4(g).decision == Verdict::kReject, contains_subgraph(g, kC4)) << n << " " << mask;
    }
  }
}

TEST(C4, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 6 + seed % 40;
    const std::size_t m = std::min<std::size_t>(pair_count(n), n / 2 + seed % (2 * n));
    const Graph g = scramble_ids(random_gnm(n, m, seed), seed);
    RunOptions options;
    options.budget_multiplier = 8;
    EXPECT_EQ(detect_c4(g, options).decision == Verdict::kReject, contains_subgraph(g, kC4)) << seed;
  }
}

TEST(C4, DenseGraphsTripTheDegreeRule) {
  const Graph g = complete_graph(12);
  const auto states = final_states(g);
  for (const auto& s : states) {
    EXPECT_EQ(s.degree_sum, 121u);
    EXPECT_TRUE(s.degree_rule);
  }
}

TEST(C4, StateIsConsistent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnm(30, 45 + seed, seed);
    const std::size_t cap = c4_threshold(g.node_count());
    const auto states = final_states(g);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      const auto& s = states[v];
      std::vector<NodeIndex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
      std::uint64_t sum = 0;
      for (std::size_t p = 0; p < nb.size(); ++p) {
        EXPECT_EQ(s.neighbor_degrees[p], g.degree(nb[p]));
        sum += g.degree(nb[p]);
      }
      EXPECT_EQ(s.degree_sum, sum);
      EXPECT_EQ(s.degree_rule, sum >= 2 * g.node_count() + 1);
      std::sort(nb.begin(), nb.end(), [&](NodeIndex a, NodeIndex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : g.id(a) < g.id(b);
      });
      nb.resize(std::min(nb.size(), cap));
      std::vector<NodeId> expected;
      for (NodeIndex u : nb) expected.push_back(g.id(u));
      EXPECT_EQ(s.s_set, expected);
      // Every neighbor's S-set arrived intact.
      std::size_t p = 0;
      for (NodeIndex u : g.neighbors(v)) EXPECT_EQ(s.neighbor_s_sets[p++], states[u].s_set);
    }
  }
}

TEST(C4, RoundCount) {
  for (std::size_t n : {8u, 32u, 100u}) {
    const RunReport r = detect_c4(random_gnm(n, n, 1));
    EXPECT_EQ(r.logical_rounds, static_cast<int>(c4_threshold(n)) + 3);
    EXPECT_GE(r.rounds_used, r.logical_rounds);
    EXPECT_LE(r.max_edge_bits, static_cast<std::size_t>(r.bits_per_edge_per_round));
  }
}
