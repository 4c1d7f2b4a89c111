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

#include <deque>
#include <set>

#include "congest/error.hpp"
#include "congest/generators.hpp"
#include "congest/oracle.hpp"
#include "congest/property_tester.hpp"

using namespace congest;

namespace {

// x - z1 - z2 - y
HPattern p4_through_anchor() {
  return HPattern(RootedPattern::from_edges(2, {{1, 2}}, 1), {{AnchorEnd::kX, 1}, {AnchorEnd::kY, 2}});
}

// Triangle x y z1.
HPattern triangle() {
  return HPattern(RootedPattern::from_edges(1, {}, 1), {{AnchorEnd::kX, 1}, {AnchorEnd::kY, 1}});
}

std::vector<std::size_t> distances(const Graph& g, NodeIndex a, NodeIndex b) {
  std::vector<std::size_t> d(g.node_count(), SIZE_MAX);
  std::deque<NodeIndex> q{a, b};
  d[a] = d[b] = 0;
  while (!q.empty()) {
    const NodeIndex u = q.front();
    q.pop_front();
    for (NodeIndex v : g.neighbors(u)) {
      if (d[v] == SIZE_MAX) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
    }
  }
  return d;
}

}  // namespace

TEST(Candidate, RankRange) {
  EXPECT_EQ(rank_range(1), 1u);
  EXPECT_EQ(rank_range(10), 10000u);
  EXPECT_EQ(rank_range(1u << 20), std::uint64_t{1} << 63);
}

TEST(Candidate, EmptyGraphThrows) { EXPECT_THROW(select_candidate(empty_graph(3), 0), EmptyGraph); }

TEST(Candidate, SingleEdgeOrientationIsFair) {
  const Graph g = path_graph(2);
  int x_first = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto c = select_candidate(g, seed);
    ASSERT_TRUE(c.unique);
    ASSERT_EQ(std::set<NodeId>({c.x, c.y}), (std::set<NodeId>{0, 1}));
    x_first += c.x == 0;
  }
  EXPECT_NEAR(x_first / 2000.0, 0.5, 0.05);
}

TEST(Candidate, MinimumIsUsuallyUnique) {
  int unique = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    unique += select_candidate(random_gnm(20, 50, seed), seed).unique;
  }
  EXPECT_GE(unique, 450);
}

TEST(Candidate, TrialsDiffer) {
  const Graph g = random_gnm(12, 30, 1);
  std::set<std::uint64_t> ranks;
  for (std::uint64_t t = 0; t < 20; ++t) ranks.insert(select_candidate(g, 3, t).rank);
  EXPECT_GT(ranks.size(), 15u);
}

TEST(Candidate, ForcedTieIsReported) {
  const Graph g = cycle_graph(6);
  const ForcedRanks forced{{{0, 1}, 1}, {{3, 4}, 1}};
  const auto c = select_candidate(g, 0, 0, forced);
  EXPECT_FALSE(c.unique);
  EXPECT_EQ(c.rank, 1u);
}

TEST(Constrained, Examples) {
  const HPattern c4 = c4_h_pattern();
  EXPECT_EQ(constrained_tree_detection(cycle_graph(4), c4, {0, 1}).decision, Verdict::kReject);
  EXPECT_EQ(constrained_tree_detection(path_graph(6), c4, {2, 3}).decision, Verdict::kAccept);
  EXPECT_EQ(constrained_tree_detection(complete_graph(4), c4, {0, 1}).decision, Verdict::kReject);
  EXPECT_EQ(constrained_tree_detection(complete_graph(4), k4_h_pattern(), {2, 0}).decision, Verdict::kReject);
  EXPECT_EQ(constrained_tree_detection(cycle_graph(5), c4, {0, 1}).decision, Verdict::kAccept);
  EXPECT_THROW(constrained_tree_detection(path_graph(4), c4, {0, 2}), AnchorNotAnEdge);
}

TEST(Constrained, MatchesOracleOnSmallGraphs) {
  const std::vector<HPattern> patterns{c4_h_pattern(), k4_h_pattern(), p4_through_anchor(), triangle()};
  for (std::uint64_t mask = 0; mask < 1024; mask += 7) {
    const Graph g = graph_from_mask(5, mask);
    for (const auto& h : patterns) {
      for (NodeIndex a = 0; a < g.node_count(); ++a) {
        for (NodeIndex b : g.neighbors(a)) {
          const std::pair<NodeId, NodeId> anchor{g.id(a), g.id(b)};
          EXPECT_EQ(constrained_tree_detection(g, h, anchor).decision == Verdict::kReject,
                    contains_h_at(g, h, anchor))
              << mask << " " << a << "->" << b;
        }
      }
    }
  }
}

TEST(Constrained, MatchesOracleOnEightNodeGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_gnm(8, 10 + seed % 10, seed);
    for (const auto& h : {c4_h_pattern(), k4_h_pattern()}) {
      for (NodeIndex a = 0; a < g.node_count(); ++a) {
        for (NodeIndex b : g.neighbors(a)) {
          const std::pair<NodeId, NodeId> anchor{g.id(a), g.id(b)};
          EXPECT_EQ(constrained_tree_detection(g, h, anchor).decision == Verdict::kReject,
                    contains_h_at(g, h, anchor));
        }
      }
    }
  }
}

TEST(Tester, CandidateSpreadsAndParticipantsAreNearby) {
  const HPattern h = c4_h_pattern();
  const HTesterProgram program(h);
  const std::size_t radius = static_cast<std::size_t>(program.search_tree().height()) + 1;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnm(24, 30, seed);
    const auto c = select_candidate(g, seed, 0);
    const auto d = distances(g, *g.index_of(c.x), *g.index_of(c.y));
    RunOptions options;
    options.seed = seed;
    std::vector<TesterNodeState> last(g.node_count());
    options.observer = [&](int, NodeIndex v, const NodeProcess& p) {
      last[v] = dynamic_cast<const TesterStateHolder&>(p).tester_state();
    };
    run(g, program, options);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      // The owner endpoint alone starts the flood, one hop behind the other.
      if (d[v] < static_cast<std::size_t>(program.broadcast_hops())) {
        ASSERT_TRUE(last[v].candidate.has_value());
        EXPECT_EQ(last[v].candidate->rank, c.rank);
        EXPECT_EQ(last[v].dist, d[v]);
        EXPECT_EQ(last[v].participant, c.unique && d[v] <= radius) << v;
      }
    }
  }
}

TEST(Tester, FarNodesDoNotMatter) {
  const HPattern h = c4_h_pattern();
  const std::size_t radius = static_cast<std::size_t>(HTesterProgram(h).search_tree().height()) + 1;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_gnm(20, 28, seed);
    NodeIndex a = seed % g.node_count();
    while (g.neighbors(a).empty()) a = (a + 1) % g.node_count();
    const NodeIndex b = g.neighbors(a).front();
    const auto d = distances(g, a, b);
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
      if (d[e.u] <= radius && d[e.v] <= radius) kept.push_back(e);
    }
    const Graph local(g.ids(), kept);
    const std::pair<NodeId, NodeId> anchor{g.id(a), g.id(b)};
    EXPECT_EQ(constrained_tree_detection(g, h, anchor).decision,
              constrained_tree_detection(local, h, anchor).decision);
  }
}

TEST(Tester, TiedMinimumMeansNoParticipant) {
  const Graph g = complete_graph(4);
  TesterProgramOptions program_options;
  program_options.forced_ranks = {{{0, 1}, 1}, {{2, 3}, 1}};
  const HTesterProgram program(c4_h_pattern(), program_options);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunOptions options;
    options.seed = seed;
    bool any = false;
    options.observer = [&](int, NodeIndex, const NodeProcess& p) {
      any |= dynamic_cast<const TesterStateHolder&>(p).tester_state().participant;
    };
    EXPECT_EQ(run(g, program, options).decision, Verdict::kAccept);
    EXPECT_FALSE(any);
  }
  TesterOptions tester;
  tester.forced_ranks = program_options.forced_ranks;
  EXPECT_EQ(test_h_freeness(g, c4_h_pattern(), 0.5, 0, {}, tester).report.decision, Verdict::kAccept);
}

TEST(Tester, TrialCount) {
  EXPECT_EQ(tester_trial_count(c4_h_pattern(), 0.2), 325u);
  EXPECT_EQ(tester_trial_count(c4_h_pattern(), 0.5), 130u);
  EXPECT_THROW(test_h_freeness(cycle_graph(4), c4_h_pattern(), 0.0, 0), InvalidParams);
  EXPECT_THROW(test_h_freeness(cycle_graph(4), c4_h_pattern(), 1.0, 0), InvalidParams);
  TesterOptions capped;
  capped.max_trials = 100;
  EXPECT_THROW(test_h_freeness(cycle_graph(4), c4_h_pattern(), 0.2, 0, {}, capped), TrialBudgetExceeded);
}

TEST(Tester, HFreeGraphsAccept) {
  TesterOptions all;
  all.stop_at_first_reject = false;
  const auto r = test_h_freeness(star_graph(6), c4_h_pattern(), 0.2, 0, {}, all);
  EXPECT_EQ(r.report.decision, Verdict::kAccept);
  EXPECT_EQ(r.trials.size(), 325u);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(test_h_freeness(petersen_graph(), c4_h_pattern(), 0.3, seed).report.decision, Verdict::kAccept);
  }
}

TEST(Tester, FarInstanceRejects) {
  const Graph g = gen_far_instance(c4_h_pattern(), 5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = test_h_freeness(g, c4_h_pattern(), 0.2, seed);
    EXPECT_EQ(r.report.decision, Verdict::kReject);
    EXPECT_EQ(r.trials.back().verdict, Verdict::kReject);
  }
  EXPECT_EQ(test_h_freeness(complete_bipartite(2, 3), c4_h_pattern(), 0.2, 0).report.decision,
            Verdict::kReject);
}

TEST(Tester, RecordsMatchCandidates) {
  const Graph g = random_gnm(10, 15, 4);
  TesterOptions all;
  all.stop_at_first_reject = false;
  const auto r = test_h_freeness(g, k4_h_pattern(), 0.9, 7, {}, all);
  for (const auto& t : r.trials) {
    ASSERT_TRUE(t.candidate.has_value());
    EXPECT_EQ(*t.candidate, select_candidate(g, 7, t.trial));
    EXPECT_GT(t.rounds, 0);
  }
}
