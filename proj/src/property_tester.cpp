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

#include "congest/property_tester.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "congest/error.hpp"
#include "congest/rng.hpp"

namespace congest {

std::uint64_t rank_range(std::size_t n) {
  const std::uint64_t v = std::max<std::uint64_t>(n, 1);
  if (v >= (std::uint64_t{1} << 16)) return std::uint64_t{1} << 63;
  return v * v * v * v;
}

namespace {

struct Draw {
  NodeId other;
  std::uint64_t rank;
  bool owner_first;
};

/// The draws of one node for its owned edges, in ascending order of the
/// other endpoint.
std::vector<Draw> draw_owned(NodeId self, std::vector<NodeId> neighbors, std::uint64_t stream,
                             std::uint64_t range, const ForcedRanks& forced) {
  std::sort(neighbors.begin(), neighbors.end());
  SplitMix64 rng(stream);
  std::vector<Draw> out;
  for (NodeId v : neighbors) {
    if (v <= self) continue;
    Draw d{v, rng.uniform_below(range) + 1, rng.coin()};
    if (auto it = forced.find({self, v}); it != forced.end()) d.rank = it->second;
    out.push_back(d);
  }
  return out;
}

CandidateSelection oriented(NodeId owner, const Draw& d) {
  CandidateSelection c;
  c.x = d.owner_first ? owner : d.other;
  c.y = d.owner_first ? d.other : owner;
  c.rank = d.rank;
  return c;
}

std::pair<NodeId, NodeId> edge_key(const CandidateSelection& c) {
  return std::minmax(c.x, c.y);
}

}  // namespace

CandidateSelection select_candidate(const Graph& g, std::uint64_t seed, std::uint64_t trial,
                                    const ForcedRanks& forced) {
  if (g.edge_count() == 0) throw EmptyGraph("candidate selection needs an edge");
  const std::uint64_t range = rank_range(g.node_count());
  std::optional<CandidateSelection> best;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    std::vector<NodeId> neighbors;
    for (NodeIndex v : g.neighbors(u)) neighbors.push_back(g.id(v));
    for (const Draw& d : draw_owned(g.id(u), neighbors, stream_seed(seed, g.id(u), trial), range, forced)) {
      const CandidateSelection c = oriented(g.id(u), d);
      if (!best || c.rank < best->rank || (c.rank == best->rank && edge_key(c) < edge_key(*best))) {
        const bool tied = best && c.rank == best->rank;
        best = c;
        best->unique = !tied;
      } else if (c.rank == best->rank) {
        best->unique = false;
      }
    }
  }
  return *best;
}

namespace {

struct Codec {
  int rank_width;
  int id_width;
  int dist_width;

  std::size_t flood_bits() const { return rank_width + 2 * id_width + 1 + dist_width; }
  std::size_t assignment_bits() const { return rank_width + 2 * id_width; }
};

Codec codec_for(const NetworkGlobals& globals, int hops) {
  return {std::max(1, ceil_log2(rank_range(globals.n))), globals.id_width,
          std::max(1, bit_width_of(static_cast<std::uint64_t>(hops) + 1))};
}

bool same_edge(const CandidateSelection& a, const CandidateSelection& b) {
  return a.rank == b.rank && a.x == b.x && a.y == b.y;
}

class HTesterProcess : public NodeProcess, public SosHolder, public TesterStateHolder {
 public:
  HTesterProcess(const HPattern& h, const RootedPattern& tree, const TesterProgramOptions& options,
                 const NodeContext& ctx)
      : h_(h),
        tree_(tree),
        options_(options),
        ctx_(ctx),
        hops_(2 * (tree.height() + 1)),
        codec_(codec_for(ctx.globals, hops_)),
        channel_(ctx.neighbors.size(), ctx.globals.budget),
        engine_(tree, ctx.self, ctx.neighbors, ctx.globals, options.search) {}

  StepResult step(int round, std::span<const Message> inbox) override {
    StepResult result;
    if (round == 1) {
      initialize();
      open_flood();
      result.outbox = channel_.send();
      return result;
    }
    switch (phase_) {
      case Phase::kFlood:
        if (!channel_.receive(inbox)) {
          result.outbox = channel_.send();
          break;
        }
        absorb_flood(channel_.take_received());
        if (++hop_ < hops_) {
          open_flood();
          result.outbox = channel_.send();
          break;
        }
        state_.participant = state_.candidate && state_.candidate->unique &&
                             state_.dist <= static_cast<std::size_t>(tree_.height()) + 1;
        phase_ = Phase::kAssign;
        open_assignment();
        result.outbox = channel_.send();
        break;
      case Phase::kAssign:
        if (!channel_.receive(inbox)) {
          result.outbox = channel_.send();
          break;
        }
        phase_ = Phase::kSearch;
        result.outbox = start_search(channel_.take_received());
        searching_ = true;
        break;
      case Phase::kSearch:
        result.outbox = engine_.advance(inbox);
        break;
    }
    if (searching_ && engine_.done()) result.output = engine_.found() ? Verdict::kReject : Verdict::kAccept;
    return result;
  }

  NodeId holder_id() const override { return ctx_.self; }
  const SosTable* sos_tables() const override { return searching_ ? &engine_.tables() : nullptr; }
  const TesterNodeState& tester_state() const override { return state_; }

 private:
  enum class Phase { kFlood, kAssign, kSearch };

  void initialize() {
    if (options_.anchor) {
      const auto [x, y] = *options_.anchor;
      if (ctx_.self == x || ctx_.self == y) {
        state_.candidate = CandidateSelection{x, y, 1, true};
        state_.dist = 0;
      }
      return;
    }
    const auto draws = draw_owned(ctx_.self, ctx_.neighbors, ctx_.random_seed,
                                  rank_range(ctx_.globals.n), options_.forced_ranks);
    for (const Draw& d : draws) consider(oriented(ctx_.self, d), 0);
  }

  /// Folds one announced candidate into the local best.
  void consider(const CandidateSelection& c, std::size_t dist) {
    auto& best = state_.candidate;
    if (!best || c.rank < best->rank) {
      best = c;
      state_.dist = dist;
    } else if (c.rank == best->rank) {
      if (!c.unique || edge_key(c) != edge_key(*best)) {
        best->unique = false;
      } else {
        state_.dist = std::min(state_.dist, dist);
      }
    }
    if (best->unique && (best->x == ctx_.self || best->y == ctx_.self)) state_.dist = 0;
  }

  void open_flood() {
    std::optional<BitString> payload;
    if (state_.candidate) {
      const auto& c = *state_.candidate;
      payload.emplace();
      payload->push(c.rank - 1, codec_.rank_width);
      payload->push(c.x, codec_.id_width);
      payload->push(c.y, codec_.id_width);
      payload->push_bit(!c.unique);
      payload->push(std::min<std::size_t>(state_.dist, static_cast<std::size_t>(hops_)), codec_.dist_width);
    }
    channel_.begin(payload, fragment_count(codec_.flood_bits(), ctx_.globals.budget));
  }

  void absorb_flood(const std::vector<std::optional<BitString>>& received) {
    for (const auto& message : received) {
      if (!message) continue;
      BitReader reader(*message);
      CandidateSelection c;
      c.rank = reader.read(codec_.rank_width) + 1;
      c.x = reader.read(codec_.id_width);
      c.y = reader.read(codec_.id_width);
      c.unique = !reader.read_bit();
      const std::size_t dist = reader.read(codec_.dist_width) + 1;
      consider(c, dist);
    }
  }

  void open_assignment() {
    std::optional<BitString> payload;
    if (state_.participant) {
      const auto& c = *state_.candidate;
      payload.emplace();
      payload->push(c.rank - 1, codec_.rank_width);
      payload->push(c.x, codec_.id_width);
      payload->push(c.y, codec_.id_width);
    }
    channel_.begin(payload, fragment_count(codec_.assignment_bits(), ctx_.globals.budget));
  }

  std::vector<Message> start_search(const std::vector<std::optional<BitString>>& received) {
    const std::size_t ports = ctx_.neighbors.size();
    std::vector<bool> usable(ports, false);
    std::vector<bool> admitted(static_cast<std::size_t>(tree_.size()) + 1, false);
    if (state_.participant) {
      const auto& mine = *state_.candidate;
      for (std::size_t p = 0; p < ports; ++p) {
        if (!received[p]) continue;
        BitReader reader(*received[p]);
        CandidateSelection c;
        c.rank = reader.read(codec_.rank_width) + 1;
        c.x = reader.read(codec_.id_width);
        c.y = reader.read(codec_.id_width);
        usable[p] = same_edge(c, mine);
      }
      const auto& nb = ctx_.neighbors;
      const bool near_x = std::find(nb.begin(), nb.end(), mine.x) != nb.end();
      const bool near_y = std::find(nb.begin(), nb.end(), mine.y) != nb.end();
      const bool endpoint = ctx_.self == mine.x || ctx_.self == mine.y;
      for (Label l = 1; l <= tree_.size(); ++l) {
        admitted[l] = !endpoint && (!h_.linked(AnchorEnd::kX, l) || near_x) &&
                      (!h_.linked(AnchorEnd::kY, l) || near_y);
      }
    }
    return engine_.start(state_.participant, std::move(admitted), std::move(usable));
  }

  const HPattern& h_;
  const RootedPattern& tree_;
  const TesterProgramOptions& options_;
  NodeContext ctx_;
  int hops_;
  Codec codec_;
  ExchangeChannel channel_;
  SosEngine engine_;
  Phase phase_ = Phase::kFlood;
  int hop_ = 0;
  bool searching_ = false;
  TesterNodeState state_;
};

}  // namespace

HTesterProgram::HTesterProgram(HPattern h, TesterProgramOptions options)
    : h_(std::move(h)), tree_(h_.tree().rerooted(h_.anchored_root())), options_(std::move(options)) {}

std::unique_ptr<NodeProcess> HTesterProgram::spawn(const NodeContext& ctx) const {
  return std::make_unique<HTesterProcess>(h_, tree_, options_, ctx);
}

int HTesterProgram::logical_rounds(const NetworkGlobals&) const {
  // flood hops, the assignment exchange, then the table search
  return broadcast_hops() + 1 + tree_.height() + 1;
}

RunReport constrained_tree_detection(const Graph& g, const HPattern& h,
                                     std::pair<NodeId, NodeId> anchor,
                                     const RunOptions& run_options,
                                     const TreeDetectionOptions& options) {
  const auto x = g.index_of(anchor.first);
  const auto y = g.index_of(anchor.second);
  if (!x || !y || !g.adjacent(*x, *y)) throw AnchorNotAnEdge("anchor is not an edge of the graph");
  TesterProgramOptions program_options;
  program_options.anchor = anchor;
  program_options.search = options;
  return run(g, HTesterProgram(h, program_options), run_options);
}

std::uint64_t tester_trial_count(const HPattern& h, double eps) {
  const double e2 = std::numbers::e * std::numbers::e;
  return static_cast<std::uint64_t>(
      std::ceil(2.0 * e2 * static_cast<double>(h.edge_count()) * std::log(3.0) / eps));
}

TesterResult test_h_freeness(const Graph& g, const HPattern& h, double eps, std::uint64_t seed,
                             const RunOptions& run_options, const TesterOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("eps must lie strictly between 0 and 1");
  TesterResult result;
  result.trials_planned = tester_trial_count(h, eps);
  if (result.trials_planned > options.max_trials) {
    throw TrialBudgetExceeded("tester needs " + std::to_string(result.trials_planned) +
                              " trials, cap is " + std::to_string(options.max_trials));
  }
  TesterProgramOptions program_options;
  program_options.forced_ranks = options.forced_ranks;
  program_options.search = options.search;
  const HTesterProgram program(h, program_options);

  RunOptions trial_options = run_options;
  trial_options.seed = seed;
  for (std::uint64_t t = 0; t < result.trials_planned; ++t) {
    trial_options.trial = t;
    RunReport part = run(g, program, trial_options);
    TrialRecord record;
    record.trial = t;
    if (g.edge_count() > 0) record.candidate = select_candidate(g, seed, t, options.forced_ranks);
    record.verdict = part.decision;
    record.rounds = part.rounds_used;
    result.trials.push_back(record);
    if (t == 0) {
      result.report = std::move(part);
    } else {
      accumulate(result.report, part);
    }
    if (options.stop_at_first_reject && result.report.decision == Verdict::kReject) break;
  }
  result.report.algorithm = program.name();
  result.report.seed = seed;
  return result;
}

}  // namespace congest
