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

#include <map>
#include <set>

#include "congest/error.hpp"
#include "congest/generators.hpp"
#include "congest/oracle.hpp"
#include "congest/tree_detection.hpp"

using namespace congest;

namespace {

RootedPattern centered(int k, std::vector<LabelEdge> edges) { return RootedPattern::centered(k, edges); }

RootedPattern p2() { return centered(2, {{1, 2}}); }
RootedPattern p3() { return centered(3, {{1, 2}, {2, 3}}); }
RootedPattern p4() { return centered(4, {{1, 2}, {2, 3}, {3, 4}}); }
RootedPattern k13() { return centered(4, {{1, 2}, {1, 3}, {1, 4}}); }

SosTable table_with(int k, Label l, std::vector<SubtreeWitness> ws) {
  SosTable t(static_cast<std::size_t>(k) + 1);
  t[l] = std::move(ws);
  return t;
}

bool well_colored_copy(const Graph& g, const RootedPattern& t, const std::map<NodeId, int>& color) {
  // Map label l to a node of color l, adjacent along tree edges, injective.
  std::vector<NodeIndex> image(static_cast<std::size_t>(t.size()) + 1);
  const auto order = t.preorder(t.root());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return true;
    const Label l = order[i];
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      if (color.at(g.id(v)) != l) continue;
      if (auto p = t.parent(l); p && !g.adjacent(v, image[*p])) continue;
      image[l] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST(SosExtend, LeafIsTheNodeItself) {
  const auto out = sos_extend(7, p3(), 1, {});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].assignment, (std::vector<NodeId>{7}));
}

TEST(SosExtend, TwoLeafChildrenDedupeByVertexSet) {
  // P3 rooted at 2 with leaf children 1 and 3; u = 0 with neighbors 5 and 6.
  const RootedPattern t = p3();
  ASSERT_EQ(t.root(), 2);
  const std::vector<SosTable> neighbors{
      [&] { auto s = table_with(3, 1, {{1, {5}}}); s[3] = {{3, {5}}}; return s; }(),
      [&] { auto s = table_with(3, 1, {{1, {6}}}); s[3] = {{3, {6}}}; return s; }()};
  const auto out = sos_extend(0, t, 2, neighbors);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].assignment, (std::vector<NodeId>{0, 5, 6}));
}

TEST(SosExtend, OverlappingChildrenGiveNothing) {
  // Shape 3 - {2 - 1}: u's only neighbor offers a witness containing u.
  const RootedPattern t = RootedPattern::from_edges(3, {{3, 2}, {2, 1}}, 3);
  const std::vector<SosTable> neighbors{table_with(3, 2, {{2, {5, 0}}})};
  EXPECT_TRUE(sos_extend(0, t, 3, neighbors).empty());
  // Two children whose witnesses share node 9.
  const RootedPattern s = RootedPattern::from_edges(5, {{1, 2}, {1, 3}, {2, 4}, {3, 5}}, 1);
  std::vector<SosTable> two(2, SosTable(6));
  two[0][2] = {{2, {5, 9}}};
  two[1][3] = {{3, {6, 9}}};
  EXPECT_TRUE(sos_extend(0, s, 1, two).empty());
  two[1][3] = {{3, {6, 8}}};
  EXPECT_EQ(sos_extend(0, s, 1, two).size(), 1u);
}

TEST(SosExtend, EnumerationCapIsAnError) {
  const RootedPattern t = RootedPattern::centered(4, {{1, 2}, {1, 3}, {1, 4}});
  std::vector<SosTable> neighbors;
  for (NodeId v = 1; v <= 30; ++v) {
    SosTable s(5);
    for (Label l = 2; l <= 4; ++l) s[l] = {{l, {v}}};
    neighbors.push_back(s);
  }
  EXPECT_THROW(sos_extend(0, t, 1, neighbors, 1000), EnumerationLimitExceeded);
  EXPECT_EQ(sos_extend(0, t, 1, neighbors).size(), 4060u);  // C(30, 3)
}

TEST(SosPrune, SmallInputsUnchanged) {
  EXPECT_TRUE(sos_prune({}, 2, 3).empty());
  const std::vector<SubtreeWitness> one{{1, {4, 5}}};
  EXPECT_EQ(sos_prune(one, 2, 3), one);
}

TEST(SosPrune, FullShapeKeepsOne) {
  const std::vector<SubtreeWitness> ws{{1, {0, 1, 2}}, {1, {0, 3, 4}}, {1, {0, 5, 6}}};
  EXPECT_EQ(sos_prune(ws, 3, 3).size(), 1u);
}

TEST(SosPrune, StarCenterFiveLeaves) {
  std::vector<SubtreeWitness> ws;
  for (NodeId leaf = 1; leaf <= 5; ++leaf) ws.push_back({2, {0, leaf}});
  for (Construction c : {Construction::kAuto, Construction::kGreedy, Construction::kSearchTree}) {
    const auto kept = sos_prune(ws, 2, 3, c);
    EXPECT_LE(kept.size(), 3u);
    std::vector<ElementSet> before, after;
    for (const auto& w : ws) before.push_back(w.vertex_set());
    for (const auto& w : kept) after.push_back(w.vertex_set());
    EXPECT_TRUE(verify_witness(SetFamily::of(before), after, 1));
  }
}

TEST(Deterministic, Examples) {
  EXPECT_EQ(deterministic_tree_detection(path_graph(2), p2()).decision, Verdict::kReject);
  EXPECT_EQ(deterministic_tree_detection(random_gnm(20, 1, 3), p2()).decision, Verdict::kReject);
  EXPECT_EQ(deterministic_tree_detection(empty_graph(4), p2()).decision, Verdict::kAccept);
  EXPECT_EQ(deterministic_tree_detection(cycle_graph(3), p4()).decision, Verdict::kAccept);
  EXPECT_EQ(deterministic_tree_detection(path_graph(5), k13()).decision, Verdict::kAccept);
  EXPECT_EQ(deterministic_tree_detection(star_graph(3), k13()).decision, Verdict::kReject);
  EXPECT_EQ(deterministic_tree_detection(empty_graph(1), RootedPattern::from_edges(1, {}, 1)).decision,
            Verdict::kReject);
}

TEST(Deterministic, MatchesOracleOnFiveNodeGraphsSmallTrees) {
  std::vector<RootedPattern> patterns;
  for (int k = 1; k <= 3; ++k)
    for (const auto& edges : all_labeled_trees(k))
      for (Label r = 1; r <= k; ++r) patterns.push_back(RootedPattern::from_edges(k, edges, r));
  for (std::uint64_t mask = 0; mask < 1024; mask += 3) {
    const Graph g = graph_from_mask(5, mask);
    for (const auto& t : patterns) {
      const bool expected = contains_subgraph(g, to_pattern_graph(t));
      EXPECT_EQ(deterministic_tree_detection(g, t).decision == Verdict::kReject, expected) << mask;
    }
  }
}

TEST(Deterministic, MatchesOracleOnRandomGraphs) {
  for (int k = 4; k <= 6; ++k) {
    const auto trees = all_unlabeled_trees(k);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const std::size_t n = 8 + seed % 24;
      const Graph g = scramble_ids(random_gnm(n, n * (1 + seed % 3) / 2 + 1, seed), seed);
      for (const auto& edges : trees) {
        const RootedPattern t = RootedPattern::centered(k, edges);
        const bool expected = contains_subgraph(g, to_pattern_graph(t));
        RunOptions options;
        options.budget_multiplier = 8;
        EXPECT_EQ(deterministic_tree_detection(g, t, options).decision == Verdict::kReject, expected)
            << "k=" << k << " seed=" << seed;
      }
    }
  }
}

TEST(Deterministic, TablesStayValidAfterEveryRound) {
  const RootedPattern t = centered(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = random_gnm(16, 28, seed);
    const std::size_t bound_cap = witness_size_bound(1, 4);
    std::size_t checked = 0;
    RunOptions options;
    options.observer = [&](int, NodeIndex v, const NodeProcess& process) {
      const auto* holder = dynamic_cast<const SosHolder*>(&process);
      ASSERT_NE(holder, nullptr);
      const SosTable* tables = holder->sos_tables();
      if (!tables) return;
      for (Label l = 1; l <= t.size(); ++l) {
        const auto& ws = (*tables)[l];
        EXPECT_LE(ws.size(), std::max<std::uint64_t>(bound_cap, sos_table_bound(t.shape_size(l), 5, t.is_leaf(l))));
        const auto parents = t.preorder_parents(l);
        for (const auto& w : ws) {
          ++checked;
          ASSERT_EQ(w.assignment.size(), static_cast<std::size_t>(t.shape_size(l)));
          EXPECT_EQ(w.assignment[0], g.id(v));
          EXPECT_EQ(std::set<NodeId>(w.assignment.begin(), w.assignment.end()).size(), w.assignment.size());
          for (std::size_t i = 1; i < w.assignment.size(); ++i) {
            EXPECT_TRUE(g.adjacent(*g.index_of(w.assignment[i]), *g.index_of(w.assignment[parents[i]])));
          }
        }
      }
    };
    deterministic_tree_detection(g, t, options);
    EXPECT_GT(checked, 0u);
  }
}

TEST(Deterministic, PruningKeepsEveryAvoidableBlocker) {
  const RootedPattern t = centered(4, {{1, 2}, {1, 3}, {1, 4}});
  std::size_t prunes = 0;
  TreeDetectionOptions options;
  options.on_prune = [&](NodeId, Label, int, int q, const auto& before, const auto& after) {
    ++prunes;
    std::set<NodeId> ground;
    for (const auto& w : before) ground.insert(w.assignment.begin(), w.assignment.end());
    const std::vector<NodeId> elems(ground.begin(), ground.end());
    std::vector<NodeId> blocker;
    auto avoids = [&](const SubtreeWitness& w) {
      return std::none_of(w.assignment.begin(), w.assignment.end(), [&](NodeId v) {
        return std::find(blocker.begin(), blocker.end(), v) != blocker.end();
      });
    };
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
      if (std::any_of(before.begin(), before.end(), avoids)) {
        EXPECT_TRUE(std::any_of(after.begin(), after.end(), avoids));
      }
      if (static_cast<int>(blocker.size()) == q) return;
      for (std::size_t i = next; i < elems.size(); ++i) {
        blocker.push_back(elems[i]);
        rec(i + 1);
        blocker.pop_back();
      }
    };
    rec(0);
  };
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    deterministic_tree_detection(random_gnm(8, 14, seed), t, {}, options);
  }
  EXPECT_GT(prunes, 0u);
}

TEST(Deterministic, RoundsIndependentOfN) {
  const RootedPattern t = centered(4, {{1, 2}, {2, 3}, {3, 4}});
  std::set<int> rounds;
  for (std::size_t n : {20u, 40u, 80u}) {
    const Graph g = gen_component_bounded(n, 3, 0.5, n);
    const RunReport r = deterministic_tree_detection(g, t);
    EXPECT_EQ(r.decision, Verdict::kAccept);
    rounds.insert(r.rounds_used);
  }
  EXPECT_EQ(rounds.size(), 1u);
}

TEST(Deterministic, RoundFormula) {
  const RootedPattern t = p4();
  const Graph g = path_graph(32);
  const NetworkGlobals globals = make_globals(g, kDefaultBudgetMultiplier, 0);
  const RunReport r = deterministic_tree_detection(g, t);
  EXPECT_EQ(r.rounds_used, SosEngine::total_rounds(t, globals));
  EXPECT_EQ(r.logical_rounds, t.height() + 1);
}

TEST(Randomized, PhaseCounts) {
  EXPECT_EQ(randomized_phase_count(1), 2u);
  EXPECT_EQ(randomized_phase_count(2), 5u);
  EXPECT_EQ(randomized_phase_count(3), 30u);
  EXPECT_EQ(randomized_phase_count(4), 282u);
  EXPECT_EQ(randomized_phase_count(5), 3434u);
}

TEST(Randomized, NeedsBfsLabels) {
  const RootedPattern t = RootedPattern::from_edges(3, {{1, 2}, {2, 3}}, 1);
  EXPECT_THROW(randomized_phase(path_graph(3), t, 0), InvalidPattern);
  EXPECT_NO_THROW(randomized_phase(path_graph(3), bfs_labeled(t), 0));
}

TEST(Randomized, SingleEdgeRejectsExactlyOnWellColoredSeeds) {
  const RootedPattern t = bfs_labeled(p2());
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    std::map<NodeId, int> colors;
    RunOptions options;
    options.observer = [&](int, NodeIndex v, const NodeProcess& p) {
      colors[v] = dynamic_cast<const ColorStateHolder&>(p).color_state().color;
    };
    const RunReport r = randomized_phase(path_graph(2), t, seed, options);
    const bool well = colors[0] != colors[1];
    EXPECT_EQ(r.decision == Verdict::kReject, well) << seed;
    rejects += well ? 1 : 0;
  }
  EXPECT_GT(rejects, 0);
  EXPECT_LT(rejects, 64);
}

TEST(Randomized, RejectsIffSomeCopyIsWellColored) {
  const std::vector<RootedPattern> patterns{bfs_labeled(p3()), bfs_labeled(p4()), bfs_labeled(k13()),
                                            bfs_labeled(centered(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}}))};
  for (const auto& t : patterns) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const Graph g = seed % 3 == 0 ? to_pattern_graph(t).to_graph() : random_gnm(9, 12, seed);
      std::map<NodeId, int> colors;
      std::map<NodeId, int> activated;
      RunOptions options;
      options.observer = [&](int, NodeIndex v, const NodeProcess& p) {
        const auto& s = dynamic_cast<const ColorStateHolder&>(p).color_state();
        colors[g.id(v)] = s.color;
        if (s.active) activated[g.id(v)] = s.activated_round;
      };
      const RunReport r = randomized_phase(g, t, seed, options);
      EXPECT_EQ(r.decision == Verdict::kReject, well_colored_copy(g, t, colors)) << seed;
      EXPECT_EQ(r.rounds_used, t.size() + 2);
      for (const auto& [id, round] : activated) EXPECT_EQ(round, colors[id] + 2);
    }
  }
}

TEST(Randomized, SingleNodePatternAlwaysRejects) {
  const RootedPattern t = RootedPattern::from_edges(1, {}, 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(randomized_tree_detection(path_graph(3), t, seed).report.decision, Verdict::kReject);
  }
}

TEST(Randomized, TreeFreeAlwaysAccepts) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = randomized_tree_detection(path_graph(2), p3(), seed);
    EXPECT_EQ(r.report.decision, Verdict::kAccept);
    EXPECT_EQ(r.phases_run, 30u);
  }
}

TEST(Randomized, PhaseCap) {
  RandomizedOptions options;
  options.max_phases = 100;
  EXPECT_THROW(randomized_tree_detection(path_graph(4), p4(), 0, {}, options), IterationBudgetExceeded);
}

TEST(Randomized, PathOnPathDetectedOften) {
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    rejects += randomized_tree_detection(path_graph(3), p3(), seed).report.decision == Verdict::kReject;
  }
  EXPECT_GE(rejects, 60);
}
