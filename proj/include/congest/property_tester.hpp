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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "congest/graph.hpp"
#include "congest/pattern.hpp"
#include "congest/sim.hpp"
#include "congest/tree_detection.hpp"

namespace congest {

/// Rank range R = n^4 (saturating), so R >= m^2 on every simple graph.
std::uint64_t rank_range(std::size_t n);

/// Ranks to impose on given edges, keyed by (smaller ID, larger ID). The
/// random draws still happen so the streams stay aligned.
using ForcedRanks = std::map<std::pair<NodeId, NodeId>, std::uint64_t>;

struct CandidateSelection {
  NodeId x = 0;  // oriented anchor (x, y)
  NodeId y = 0;
  std::uint64_t rank = 0;
  bool unique = true;
  friend bool operator==(const CandidateSelection&, const CandidateSelection&) = default;
};

/// Global view of one trial's draws: every edge is owned by its smaller-ID
/// endpoint, which draws rank uniform in [1, R] and then an orientation bit
/// per owned edge in ascending order of the other endpoint's ID. The bit
/// orients the edge as (owner, other) when set, (other, owner) otherwise.
/// Returns the minimum-rank edge. Throws EmptyGraph when g has no edge.
CandidateSelection select_candidate(const Graph& g, std::uint64_t seed, std::uint64_t trial = 0,
                                    const ForcedRanks& forced = {});

/// Observable state of one tester node.
struct TesterNodeState {
  std::optional<CandidateSelection> candidate;  // best seen; unique=false on a tie
  std::size_t dist = 0;                         // hops to the nearest endpoint
  bool participant = false;
};

class TesterStateHolder {
 public:
  virtual ~TesterStateHolder() = default;
  virtual const TesterNodeState& tester_state() const = 0;
};

struct TesterProgramOptions {
  /// Preset anchor: no ranks are drawn and (x, y) is the only candidate.
  std::optional<std::pair<NodeId, NodeId>> anchor;
  ForcedRanks forced_ranks;
  TreeDetectionOptions search;
};

/// One trial: rank draw, a flood of 2(d+1) hops carrying the smallest-rank
/// candidate, an exchange of assignments, then the table search for the tree
/// of H rooted at HPattern::anchored_root(), where d is that tree's height.
/// Only nodes holding an untied candidate within d+1 hops take part; a node
/// may play label l only if it is not an anchor endpoint and is adjacent to
/// every anchor endpoint that H links to l. A participant holding a witness
/// for the whole tree rejects.
class HTesterProgram : public NodeProgram {
 public:
  HTesterProgram(HPattern h, TesterProgramOptions options = {});
  std::unique_ptr<NodeProcess> spawn(const NodeContext& ctx) const override;
  std::string name() const override { return options_.anchor ? "anchored-search" : "h-tester"; }
  int logical_rounds(const NetworkGlobals&) const override;

  const RootedPattern& search_tree() const { return tree_; }
  int broadcast_hops() const { return 2 * (tree_.height() + 1); }

 private:
  HPattern h_;
  RootedPattern tree_;
  TesterProgramOptions options_;
};

/// One anchored search with (x, y) preset. Throws AnchorNotAnEdge.
RunReport constrained_tree_detection(const Graph& g, const HPattern& h,
                                     std::pair<NodeId, NodeId> anchor,
                                     const RunOptions& run_options = {},
                                     const TreeDetectionOptions& options = {});

/// ceil(2 e^2 |E(H)| ln 3 / eps).
std::uint64_t tester_trial_count(const HPattern& h, double eps);

struct TesterOptions {
  std::uint64_t max_trials = 1'000'000;
  bool stop_at_first_reject = true;
  ForcedRanks forced_ranks;
  TreeDetectionOptions search;
};

struct TrialRecord {
  std::uint64_t trial = 0;
  std::optional<CandidateSelection> candidate;  // none on an edgeless graph
  Verdict verdict = Verdict::kAccept;
  int rounds = 0;
};

struct TesterResult {
  RunReport report;
  std::uint64_t trials_planned = 0;
  std::vector<TrialRecord> trials;
};

/// Independent trials (trial index t = 0, 1, ...) run back to back; the
/// result rejects iff a trial rejects. Throws InvalidParams unless
/// 0 < eps < 1 and TrialBudgetExceeded above max_trials.
TesterResult test_h_freeness(const Graph& g, const HPattern& h, double eps, std::uint64_t seed,
                             const RunOptions& run_options = {}, const TesterOptions& options = {});

}  // namespace congest
