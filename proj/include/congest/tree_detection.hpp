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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "congest/graph.hpp"
#include "congest/pattern.hpp"
#include "congest/rep_family.hpp"
#include "congest/sim.hpp"

namespace congest {

/// A copy of the shape T_shape rooted at some node: assignment[i] is the node
/// playing preorder(shape)[i], so assignment[0] is the root.
struct SubtreeWitness {
  Label shape = 0;
  std::vector<NodeId> assignment;

  std::vector<NodeId> vertex_set() const;
  friend auto operator<=>(const SubtreeWitness&, const SubtreeWitness&) = default;
};

/// Witnesses per shape label; index 0 is unused.
using SosTable = std::vector<std::vector<SubtreeWitness>>;

inline constexpr std::size_t kDefaultEnumerationLimit = 5'000'000;

/// Every disjoint gluing of u with one witness per child of `shape`, taken
/// from the tables of distinct neighbors. Witnesses with equal vertex sets
/// collapse to the lexicographically smallest assignment; the result is
/// sorted by vertex set. Throws EnumerationLimitExceeded when more than
/// `limit` partial tuples are explored.
std::vector<SubtreeWitness> sos_extend(NodeId u, const RootedPattern& t, Label shape,
                                       std::span<const SosTable> neighbor_tables,
                                       std::size_t limit = kDefaultEnumerationLimit);

/// Keeps one witness per vertex set of a compact (p, k-p)-representation of
/// the witnesses' vertex sets.
std::vector<SubtreeWitness> sos_prune(const std::vector<SubtreeWitness>& witnesses, int p, int k,
                                      Construction construction = Construction::kAuto);

/// Most witnesses a pruned table for a shape of `p` vertices can hold.
std::uint64_t sos_table_bound(int p, int k, bool leaf);

using PruneObserver = std::function<void(NodeId u, Label shape, int p, int q,
                                         const std::vector<SubtreeWitness>& before,
                                         const std::vector<SubtreeWitness>& after)>;

struct TreeDetectionOptions {
  Construction construction = Construction::kAuto;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
  PruneObserver on_prune;
};

/// One node's side of the table-building search: depth-0 tables first, then
/// one exchange and one table computation per depth. Each exchange has a
/// fixed length derived from the table bounds, so every node finishes in the
/// same round.
class SosEngine {
 public:
  SosEngine(const RootedPattern& t, NodeId self, std::vector<NodeId> neighbors,
            const NetworkGlobals& globals, const TreeDetectionOptions& options);

  /// Physical rounds of exchange `depth` (0 <= depth < height).
  static int exchange_slots(const RootedPattern& t, int depth, const NetworkGlobals& globals);
  /// 1 + the sum of all exchange lengths.
  static int total_rounds(const RootedPattern& t, const NetworkGlobals& globals);

  /// `admitted[l]` says whether this node may play label l; `usable[p]` says
  /// whether tables arriving on port p count. A node that does not take part
  /// sends nothing and keeps empty tables. Returns the first outbox.
  std::vector<Message> start(bool participating, std::vector<bool> admitted,
                             std::vector<bool> usable);
  /// Consumes one round of messages and returns the next outbox.
  std::vector<Message> advance(std::span<const Message> inbox);

  bool done() const { return done_; }
  bool found() const { return done_ && !tables_[root_].empty(); }
  const SosTable& tables() const { return tables_; }

 private:
  void compute_depth(int depth);
  std::vector<Message> open_exchange();

  RootedPattern t_;
  NodeId self_;
  std::vector<NodeId> neighbors_;
  NetworkGlobals globals_;
  TreeDetectionOptions options_;
  Label root_;
  std::vector<std::vector<Label>> labels_by_depth_;
  bool participating_ = false;
  std::vector<bool> admitted_;
  std::vector<bool> usable_;
  SosTable tables_;
  std::vector<SosTable> neighbor_tables_;
  ExchangeChannel channel_;
  int depth_ = 0;
  bool done_ = false;
};

/// Node processes that keep SOS tables, for inspection from run observers.
class SosHolder {
 public:
  virtual ~SosHolder() = default;
  virtual NodeId holder_id() const = 0;
  /// Null while the node has no tables yet.
  virtual const SosTable* sos_tables() const = 0;
};

/// Deterministic detection by SOS tables with pruning.
class DeterministicTreeProgram : public NodeProgram {
 public:
  explicit DeterministicTreeProgram(RootedPattern t, TreeDetectionOptions options = {});
  std::unique_ptr<NodeProcess> spawn(const NodeContext& ctx) const override;
  std::string name() const override { return "det-tree"; }
  int logical_rounds(const NetworkGlobals&) const override { return t_.height() + 1; }

 private:
  RootedPattern t_;
  TreeDetectionOptions options_;
};

/// Runs the deterministic program rooted as given; use
/// RootedPattern::centered for the fewest rounds.
RunReport deterministic_tree_detection(const Graph& g, const RootedPattern& t,
                                       const RunOptions& run_options = {},
                                       const TreeDetectionOptions& options = {});

/// Color coding: IDs, then colors, then k activation rounds. The pattern must
/// be BFS-labeled (root k, children carry smaller labels).
class RandomizedTreeProgram : public NodeProgram {
 public:
  explicit RandomizedTreeProgram(RootedPattern t);
  std::unique_ptr<NodeProcess> spawn(const NodeContext& ctx) const override;
  std::string name() const override { return "rand-tree"; }
  int logical_rounds(const NetworkGlobals&) const override { return t_.size() + 2; }

 private:
  RootedPattern t_;
};

/// Readable state of one color-coding node, for observers.
struct ColorState {
  int color = 0;
  std::vector<int> neighbor_colors;
  bool active = false;
  int activated_round = 0;
};

class ColorStateHolder {
 public:
  virtual ~ColorStateHolder() = default;
  virtual const ColorState& color_state() const = 0;
};

/// One execution of the color-coding program; the random stream of each node
/// comes from (seed, node ID, trial). Throws InvalidPattern unless
/// is_bfs_labeled(t).
RunReport randomized_phase(const Graph& g, const RootedPattern& t, std::uint64_t seed,
                           const RunOptions& run_options = {});

std::uint64_t randomized_phase_count(int k);

struct RandomizedOptions {
  std::uint64_t max_phases = 1'000'000;
  /// Overrides the phase count when set.
  std::optional<std::uint64_t> phases;
  bool stop_at_first_reject = true;
};

struct RandomizedResult {
  RunReport report;
  std::uint64_t phases_planned = 0;
  std::uint64_t phases_run = 0;
};

/// ceil(k^k ln 3) phases with trial index = phase number, on the BFS
/// relabeling of t. Throws IterationBudgetExceeded above max_phases.
RandomizedResult randomized_tree_detection(const Graph& g, const RootedPattern& t,
                                           std::uint64_t seed,
                                           const RunOptions& run_options = {},
                                           const RandomizedOptions& options = {});

}  // namespace congest
