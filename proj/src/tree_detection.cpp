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

#include "congest/tree_detection.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "congest/error.hpp"
#include "congest/rng.hpp"

namespace congest {

std::vector<NodeId> SubtreeWitness::vertex_set() const {
  std::vector<NodeId> out = assignment;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubtreeWitness> sos_extend(NodeId u, const RootedPattern& t, Label shape,
                                       std::span<const SosTable> neighbor_tables,
                                       std::size_t limit) {
  const auto& children = t.children(shape);
  if (children.empty()) return {SubtreeWitness{shape, {u}}};

  std::vector<std::vector<const SubtreeWitness*>> candidates(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) {
    for (const SosTable& table : neighbor_tables) {
      if (static_cast<std::size_t>(children[i]) >= table.size()) continue;
      for (const auto& w : table[children[i]]) candidates[i].push_back(&w);
    }
    if (candidates[i].empty()) return {};
  }

  std::map<std::vector<NodeId>, std::vector<NodeId>> best;
  std::vector<NodeId> used{u};
  std::vector<const SubtreeWitness*> chosen;
  std::size_t explored = 0;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (++explored > limit) {
      throw EnumerationLimitExceeded("sos_extend explored more than " + std::to_string(limit) +
                                     " partial tuples");
    }
    if (i == children.size()) {
      std::vector<NodeId> assignment{u};
      for (const auto* w : chosen) assignment.insert(assignment.end(), w->assignment.begin(), w->assignment.end());
      std::vector<NodeId> key = used;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = best.emplace(std::move(key), assignment);
      if (!inserted && assignment < it->second) it->second = std::move(assignment);
      return;
    }
    for (const auto* w : candidates[i]) {
      const bool clash = std::any_of(w->assignment.begin(), w->assignment.end(), [&](NodeId v) {
        return std::find(used.begin(), used.end(), v) != used.end();
      });
      if (clash) continue;
      used.insert(used.end(), w->assignment.begin(), w->assignment.end());
      chosen.push_back(w);
      self(self, i + 1);
      chosen.pop_back();
      used.resize(used.size() - w->assignment.size());
    }
  };
  rec(rec, 0);

  std::vector<SubtreeWitness> out;
  out.reserve(best.size());
  for (auto& [key, assignment] : best) out.push_back({shape, std::move(assignment)});
  return out;
}

std::vector<SubtreeWitness> sos_prune(const std::vector<SubtreeWitness>& witnesses, int p, int k,
                                      Construction construction) {
  if (witnesses.size() <= 1) return witnesses;
  std::map<std::vector<NodeId>, const SubtreeWitness*> by_set;
  for (const auto& w : witnesses) {
    auto key = w.vertex_set();
    auto it = by_set.find(key);
    if (it == by_set.end() || w.assignment < it->second->assignment) by_set[key] = &w;
  }
  std::vector<ElementSet> sets;
  for (const auto& [key, w] : by_set) sets.push_back(key);
  const Witness kept = compact_representation(SetFamily::of(std::move(sets)), p, k - p, construction);
  std::vector<SubtreeWitness> out;
  for (const auto& set : kept.members) out.push_back(*by_set.at(set));
  return out;
}

std::uint64_t sos_table_bound(int p, int k, bool leaf) {
  return leaf ? 1 : witness_size_bound(p, k - p);
}

namespace {

int count_width(std::uint64_t bound, int id_width) {
  return std::max(id_width, bit_width_of(bound));
}

std::vector<std::vector<Label>> group_by_depth(const RootedPattern& t) {
  std::vector<std::vector<Label>> out(static_cast<std::size_t>(t.height()) + 1);
  for (const ShapeInfo& s : shapes(t)) out[s.depth].push_back(s.label);
  for (auto& labels : out) std::sort(labels.begin(), labels.end());
  return out;
}

std::size_t exchange_bits(const RootedPattern& t, const std::vector<Label>& labels, int id_width) {
  std::size_t bits = 0;
  for (Label l : labels) {
    const auto bound = sos_table_bound(t.shape_size(l), t.size(), t.is_leaf(l));
    bits += count_width(bound, id_width) +
            bound * static_cast<std::size_t>(t.shape_size(l)) * static_cast<std::size_t>(id_width);
  }
  return bits;
}

}  // namespace

SosEngine::SosEngine(const RootedPattern& t, NodeId self, std::vector<NodeId> neighbors,
                     const NetworkGlobals& globals, const TreeDetectionOptions& options)
    : t_(t),
      self_(self),
      neighbors_(std::move(neighbors)),
      globals_(globals),
      options_(options),
      root_(t.root()),
      labels_by_depth_(group_by_depth(t)),
      tables_(static_cast<std::size_t>(t.size()) + 1),
      neighbor_tables_(neighbors_.size(), SosTable(static_cast<std::size_t>(t.size()) + 1)),
      channel_(neighbors_.size(), globals.budget) {}

int SosEngine::exchange_slots(const RootedPattern& t, int depth, const NetworkGlobals& globals) {
  const auto labels = group_by_depth(t);
  return std::max(1, fragment_count(exchange_bits(t, labels[depth], globals.id_width), globals.budget));
}

int SosEngine::total_rounds(const RootedPattern& t, const NetworkGlobals& globals) {
  int rounds = 1;
  for (int d = 0; d < t.height(); ++d) rounds += exchange_slots(t, d, globals);
  return rounds;
}

std::vector<Message> SosEngine::start(bool participating, std::vector<bool> admitted,
                                      std::vector<bool> usable) {
  participating_ = participating;
  admitted_ = std::move(admitted);
  usable_ = std::move(usable);
  admitted_.resize(static_cast<std::size_t>(t_.size()) + 1, false);
  usable_.resize(neighbors_.size(), false);
  depth_ = 0;
  compute_depth(0);
  if (t_.height() == 0) {
    done_ = true;
    return {};
  }
  return open_exchange();
}

void SosEngine::compute_depth(int depth) {
  for (Label l : labels_by_depth_[depth]) {
    auto& table = tables_[l];
    table.clear();
    if (!participating_ || !admitted_[l]) continue;
    auto witnesses = sos_extend(self_, t_, l, neighbor_tables_, options_.enumeration_limit);
    if (t_.is_leaf(l)) {
      table = std::move(witnesses);
      continue;
    }
    const int p = t_.shape_size(l);
    table = sos_prune(witnesses, p, t_.size(), options_.construction);
    if (options_.on_prune) options_.on_prune(self_, l, p, t_.size() - p, witnesses, table);
  }
}

std::vector<Message> SosEngine::open_exchange() {
  const auto& labels = labels_by_depth_[depth_];
  const int w = globals_.id_width;
  std::optional<BitString> payload;
  const bool any = std::any_of(labels.begin(), labels.end(), [&](Label l) { return !tables_[l].empty(); });
  if (participating_ && any) {
    payload.emplace();
    for (Label l : labels) {
      const auto bound = sos_table_bound(t_.shape_size(l), t_.size(), t_.is_leaf(l));
      payload->push(tables_[l].size(), count_width(bound, w));
      for (const auto& witness : tables_[l])
        for (NodeId v : witness.assignment) payload->push(v, w);
    }
  }
  channel_.begin(payload, exchange_slots(t_, depth_, globals_));
  return channel_.send();
}

std::vector<Message> SosEngine::advance(std::span<const Message> inbox) {
  if (done_) return {};
  if (!channel_.receive(inbox)) return channel_.send();

  const auto received = channel_.take_received();
  const auto& labels = labels_by_depth_[depth_];
  const int w = globals_.id_width;
  for (std::size_t port = 0; port < received.size(); ++port) {
    if (!received[port] || !usable_[port]) continue;
    BitReader reader(*received[port]);
    for (Label l : labels) {
      const auto bound = sos_table_bound(t_.shape_size(l), t_.size(), t_.is_leaf(l));
      const auto count = reader.read(count_width(bound, w));
      if (count > bound) throw ProtocolError("table larger than its bound");
      auto& table = neighbor_tables_[port][l];
      table.clear();
      for (std::uint64_t i = 0; i < count; ++i) {
        SubtreeWitness witness{l, {}};
        for (int j = 0; j < t_.shape_size(l); ++j) witness.assignment.push_back(reader.read(w));
        if (witness.assignment.front() != neighbors_[port]) throw ProtocolError("witness not rooted at its sender");
        table.push_back(std::move(witness));
      }
    }
  }

  ++depth_;
  compute_depth(depth_);
  if (depth_ == t_.height()) {
    done_ = true;
    return {};
  }
  return open_exchange();
}

namespace {

class DeterministicTreeProcess : public NodeProcess, public SosHolder {
 public:
  DeterministicTreeProcess(const RootedPattern& t, const NodeContext& ctx,
                           const TreeDetectionOptions& options)
      : self_(ctx.self),
        k_(t.size()),
        ports_(ctx.neighbors.size()),
        engine_(t, ctx.self, ctx.neighbors, ctx.globals, options) {}

  StepResult step(int round, std::span<const Message> inbox) override {
    StepResult result;
    if (round == 1) {
      result.outbox = engine_.start(true, std::vector<bool>(static_cast<std::size_t>(k_) + 1, true),
                                    std::vector<bool>(ports_, true));
    } else {
      result.outbox = engine_.advance(inbox);
    }
    if (engine_.done()) result.output = engine_.found() ? Verdict::kReject : Verdict::kAccept;
    return result;
  }

  NodeId holder_id() const override { return self_; }
  const SosTable* sos_tables() const override { return &engine_.tables(); }

 private:
  NodeId self_;
  int k_;
  std::size_t ports_;
  SosEngine engine_;
};

}  // namespace

DeterministicTreeProgram::DeterministicTreeProgram(RootedPattern t, TreeDetectionOptions options)
    : t_(std::move(t)), options_(std::move(options)) {
  if (t_.size() < 1) throw InvalidPattern("pattern tree is empty");
}

std::unique_ptr<NodeProcess> DeterministicTreeProgram::spawn(const NodeContext& ctx) const {
  return std::make_unique<DeterministicTreeProcess>(t_, ctx, options_);
}

RunReport deterministic_tree_detection(const Graph& g, const RootedPattern& t,
                                       const RunOptions& run_options,
                                       const TreeDetectionOptions& options) {
  return run(g, DeterministicTreeProgram(t, options), run_options);
}

namespace {

class RandomizedTreeProcess : public NodeProcess, public ColorStateHolder {
 public:
  RandomizedTreeProcess(const RootedPattern& t, const NodeContext& ctx)
      : t_(t), ctx_(ctx), rng_(ctx.random_seed) {
    state_.neighbor_colors.assign(ctx.neighbors.size(), 0);
    color_width_ = std::max(1, ceil_log2(static_cast<std::uint64_t>(t.size())));
  }

  StepResult step(int round, std::span<const Message> inbox) override {
    StepResult result;
    const int k = t_.size();
    const std::size_t ports = ctx_.neighbors.size();
    if (round == 1) {
      BitString id;
      id.push(ctx_.self, ctx_.globals.id_width);
      result.outbox.assign(ports, id);
      return result;
    }
    if (round == 2) {
      for (std::size_t p = 0; p < ports; ++p) {
        if (!inbox[p]) throw ProtocolError("missing ID");
        BitReader reader(*inbox[p]);
        if (reader.read(ctx_.globals.id_width) != ctx_.neighbors[p]) throw ProtocolError("ID mismatch");
      }
      state_.color = static_cast<int>(rng_.uniform_below(static_cast<std::uint64_t>(k))) + 1;
      BitString color;
      color.push(static_cast<std::uint64_t>(state_.color - 1), color_width_);
      result.outbox.assign(ports, color);
      return result;
    }
    const int c = round - 2;
    if (c == 1) {
      for (std::size_t p = 0; p < ports; ++p) {
        if (!inbox[p]) throw ProtocolError("missing color");
        BitReader reader(*inbox[p]);
        state_.neighbor_colors[p] = static_cast<int>(reader.read(color_width_)) + 1;
      }
    } else {
      for (std::size_t p = 0; p < ports; ++p) {
        if (inbox[p]) active_neighbors_.push_back(p);
      }
    }
    if (state_.color == c) {
      bool ok = true;
      for (Label child : t_.children(c)) {
        const bool seen = std::any_of(active_neighbors_.begin(), active_neighbors_.end(),
                                      [&](std::size_t p) { return state_.neighbor_colors[p] == child; });
        if (!seen) {
          ok = false;
          break;
        }
      }
      if (ok) {
        state_.active = true;
        state_.activated_round = round;
        if (c < k) {
          BitString bit;
          bit.push_bit(true);
          result.outbox.assign(ports, bit);
        }
      }
    }
    if (c == k) result.output = state_.active && state_.color == k ? Verdict::kReject : Verdict::kAccept;
    return result;
  }

  const ColorState& color_state() const override { return state_; }

 private:
  RootedPattern t_;
  NodeContext ctx_;
  SplitMix64 rng_;
  int color_width_ = 1;
  ColorState state_;
  std::vector<std::size_t> active_neighbors_;
};

}  // namespace

RandomizedTreeProgram::RandomizedTreeProgram(RootedPattern t) : t_(std::move(t)) {
  if (t_.size() < 1) throw InvalidPattern("pattern tree is empty");
  if (!is_bfs_labeled(t_)) throw InvalidPattern("color coding needs a BFS-labeled pattern");
}

std::unique_ptr<NodeProcess> RandomizedTreeProgram::spawn(const NodeContext& ctx) const {
  return std::make_unique<RandomizedTreeProcess>(t_, ctx);
}

RunReport randomized_phase(const Graph& g, const RootedPattern& t, std::uint64_t seed,
                           const RunOptions& run_options) {
  RunOptions options = run_options;
  options.seed = seed;
  return run(g, RandomizedTreeProgram(t), options);
}

std::uint64_t randomized_phase_count(int k) {
  const double kk = std::pow(static_cast<double>(k), static_cast<double>(k));
  return static_cast<std::uint64_t>(std::ceil(kk * std::log(3.0)));
}

RandomizedResult randomized_tree_detection(const Graph& g, const RootedPattern& t,
                                           std::uint64_t seed, const RunOptions& run_options,
                                           const RandomizedOptions& options) {
  RandomizedResult result;
  result.phases_planned = options.phases ? *options.phases : randomized_phase_count(t.size());
  if (result.phases_planned > options.max_phases) {
    throw IterationBudgetExceeded("color coding needs " + std::to_string(result.phases_planned) +
                                  " phases, cap is " + std::to_string(options.max_phases));
  }
  const RandomizedTreeProgram program(bfs_labeled(t));
  RunOptions phase_options = run_options;
  phase_options.seed = seed;
  for (std::uint64_t phase = 0; phase < result.phases_planned; ++phase) {
    phase_options.trial = phase;
    RunReport part = run(g, program, phase_options);
    if (phase == 0) {
      result.report = part;
    } else {
      accumulate(result.report, part);
    }
    ++result.phases_run;
    if (options.stop_at_first_reject && result.report.decision == Verdict::kReject) break;
  }
  result.report.algorithm = program.name();
  result.report.seed = seed;
  return result;
}

}  // namespace congest
