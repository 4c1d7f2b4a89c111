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

#include "congest/sim.hpp"

#include <algorithm>
#include <numeric>

#include "congest/error.hpp"
#include "congest/rng.hpp"

namespace congest {

BandwidthBudget BandwidthBudget::for_network(std::size_t n, int multiplier) {
  if (multiplier < 2) throw InvalidParams("budget multiplier must be at least 2 (one unit is the fragment header)");
  return {std::max(1, ceil_log2(n)), multiplier};
}

namespace {

int effective_chunk(const BandwidthBudget& budget, int chunk_limit) {
  int chunk = budget.chunk_capacity();
  if (chunk_limit > 0) chunk = std::min(chunk, chunk_limit);
  if (chunk <= 0) throw BudgetExceeded("budget leaves no room for payload bits");
  return chunk;
}

}  // namespace

int fragment_count(std::size_t payload_bits, const BandwidthBudget& budget, int chunk_limit) {
  const auto chunk = static_cast<std::size_t>(effective_chunk(budget, chunk_limit));
  return static_cast<int>((payload_bits + chunk - 1) / chunk);
}

std::vector<BitString> fragment_payload(const BitString& payload, const BandwidthBudget& budget,
                                        int chunk_limit) {
  const auto chunk = static_cast<std::size_t>(effective_chunk(budget, chunk_limit));
  const int index_bits = budget.header_bits() - 1;
  const std::uint64_t index_mask = index_bits >= 64 ? ~0ULL : (std::uint64_t{1} << index_bits) - 1;
  std::vector<BitString> fragments;
  for (std::size_t begin = 0, index = 0; begin < payload.size(); begin += chunk, ++index) {
    const std::size_t count = std::min(chunk, payload.size() - begin);
    BitString fragment;
    fragment.push_bit(begin + count == payload.size());
    fragment.push(index & index_mask, index_bits);
    fragment.append(payload, begin, count);
    fragments.push_back(std::move(fragment));
  }
  return fragments;
}

BitString reassemble_fragments(std::span<const BitString> fragments, const BandwidthBudget& budget) {
  const int index_bits = budget.header_bits() - 1;
  const std::uint64_t index_mask = index_bits >= 64 ? ~0ULL : (std::uint64_t{1} << index_bits) - 1;
  BitString payload;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    BitReader reader(fragments[i]);
    const bool last = reader.read_bit();
    const std::uint64_t index = reader.read(index_bits);
    if (index != (i & index_mask)) throw ProtocolError("fragment out of order");
    if (last != (i + 1 == fragments.size())) throw ProtocolError("fragment sequence has a bad last flag");
    const std::size_t header = 1 + static_cast<std::size_t>(index_bits);
    if (fragments[i].size() <= header) throw ProtocolError("empty fragment");
    payload.append(fragments[i], header, fragments[i].size() - header);
  }
  return payload;
}

const char* to_string(Verdict v) { return v == Verdict::kAccept ? "accept" : "reject"; }

NetworkGlobals make_globals(const Graph& g, int budget_multiplier, std::uint64_t trial) {
  NetworkGlobals globals;
  globals.n = g.node_count();
  globals.id_width = std::max(1, bit_width_of(g.max_id()));
  globals.budget = BandwidthBudget::for_network(g.node_count(), budget_multiplier);
  globals.trial = trial;
  return globals;
}

RunReport run(const Graph& g, const NodeProgram& program, const RunOptions& options) {
  if (options.max_rounds < 1) throw InvalidParams("max_rounds must be at least 1");
  const std::size_t n = g.node_count();
  const NetworkGlobals globals = make_globals(g, options.budget_multiplier, options.trial);
  const auto budget_bits = static_cast<std::size_t>(globals.budget.bits_per_edge_per_round());

  RunReport report;
  report.algorithm = program.name();
  report.logical_rounds = program.logical_rounds(globals);
  report.unit_bits = globals.budget.unit_bits;
  report.bits_per_edge_per_round = globals.budget.bits_per_edge_per_round();
  report.n = n;
  report.m = g.edge_count();
  report.seed = options.seed;
  report.trial = options.trial;

  // reverse_port[v][p]: slot of v in the port list of its p-th neighbor.
  std::vector<std::vector<std::size_t>> reverse_port(n);
  std::vector<std::unique_ptr<NodeProcess>> processes;
  processes.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    NodeContext ctx;
    ctx.self = g.id(v);
    ctx.globals = globals;
    ctx.random_seed = stream_seed(options.seed, g.id(v), options.trial);
    for (NodeIndex w : g.neighbors(v)) {
      ctx.neighbors.push_back(g.id(w));
      const auto list = g.neighbors(w);
      reverse_port[v].push_back(static_cast<std::size_t>(
          std::lower_bound(list.begin(), list.end(), v) - list.begin()));
    }
    processes.push_back(program.spawn(ctx));
  }

  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) { return g.id(a) < g.id(b); });
  if (options.shuffle_seed) {
    SplitMix64 rng(mix64(*options.shuffle_seed));
    for (std::size_t i = 0; i + 1 < n; ++i) std::swap(order[i], order[i + rng.uniform_below(n - i)]);
  }

  std::vector<std::vector<Message>> inbox(n), next_inbox(n);
  for (NodeIndex v = 0; v < n; ++v) {
    inbox[v].resize(g.degree(v));
    next_inbox[v].resize(g.degree(v));
  }
  std::vector<std::optional<Verdict>> outputs(n);
  std::size_t remaining = n;

  for (int round = 1; remaining > 0; ++round) {
    if (round > options.max_rounds) {
      throw RoundLimitExceeded(program.name() + ": no decision after " +
                               std::to_string(options.max_rounds) + " rounds");
    }
    std::size_t round_max = 0;
    for (NodeIndex v : order) {
      if (outputs[v]) continue;
      StepResult result = processes[v]->step(round, inbox[v]);
      if (!result.outbox.empty()) {
        if (result.outbox.size() != g.degree(v)) throw ProtocolError("outbox size differs from degree");
        const auto neighbors = g.neighbors(v);
        for (std::size_t p = 0; p < neighbors.size(); ++p) {
          if (!result.outbox[p]) continue;
          const std::size_t bits = result.outbox[p]->size();
          if (bits > budget_bits) {
            throw BudgetExceeded(program.name() + ": node " + std::to_string(g.id(v)) + " sent " +
                                 std::to_string(bits) + " bits, budget is " +
                                 std::to_string(budget_bits));
          }
          round_max = std::max(round_max, bits);
          report.total_bits += bits;
          next_inbox[neighbors[p]][reverse_port[v][p]] = std::move(result.outbox[p]);
        }
      }
      if (result.output) {
        outputs[v] = result.output;
        --remaining;
      }
      if (options.observer) options.observer(round, v, *processes[v]);
    }
    report.max_edge_bits_per_round.push_back(round_max);
    report.max_edge_bits = std::max(report.max_edge_bits, round_max);
    report.rounds_used = round;
    std::swap(inbox, next_inbox);
    for (auto& slots : next_inbox) std::fill(slots.begin(), slots.end(), std::nullopt);
  }

  for (NodeIndex v : order) {
    report.outputs.emplace_back(g.id(v), *outputs[v]);
    if (*outputs[v] == Verdict::kReject) report.decision = Verdict::kReject;
  }
  std::sort(report.outputs.begin(), report.outputs.end());
  return report;
}

void accumulate(RunReport& total, const RunReport& part) {
  if (part.decision == Verdict::kReject) total.decision = Verdict::kReject;
  total.rounds_used += part.rounds_used;
  total.logical_rounds += part.logical_rounds;
  total.max_edge_bits = std::max(total.max_edge_bits, part.max_edge_bits);
  total.max_edge_bits_per_round.insert(total.max_edge_bits_per_round.end(),
                                       part.max_edge_bits_per_round.begin(),
                                       part.max_edge_bits_per_round.end());
  total.total_bits += part.total_bits;
  total.unit_bits = part.unit_bits;
  total.bits_per_edge_per_round = part.bits_per_edge_per_round;
  total.n = part.n;
  total.m = part.m;
  if (total.outputs.empty()) {
    total.outputs = part.outputs;
  } else {
    for (std::size_t i = 0; i < total.outputs.size() && i < part.outputs.size(); ++i) {
      if (part.outputs[i].second == Verdict::kReject) total.outputs[i].second = Verdict::kReject;
    }
  }
}

ExchangeChannel::ExchangeChannel(std::size_t ports, BandwidthBudget budget)
    : ports_(ports), budget_(budget), incoming_(ports) {}

void ExchangeChannel::begin(const std::optional<BitString>& payload, int slots, int chunk_limit) {
  if (slots < 1) throw ProtocolError("an exchange needs at least one round");
  outgoing_ = payload ? fragment_payload(*payload, budget_, chunk_limit) : std::vector<BitString>{};
  if (static_cast<int>(outgoing_.size()) > slots) {
    throw ProtocolError("payload needs " + std::to_string(outgoing_.size()) +
                        " fragments but the exchange has " + std::to_string(slots) + " rounds");
  }
  for (auto& buffer : incoming_) buffer.clear();
  slots_ = slots;
  sent_ = 0;
  received_ = 0;
}

bool ExchangeChannel::receive(std::span<const Message> inbox) {
  if (!active()) return false;
  for (std::size_t p = 0; p < ports_ && p < inbox.size(); ++p) {
    if (inbox[p]) incoming_[p].push_back(*inbox[p]);
  }
  return ++received_ == slots_;
}

std::vector<Message> ExchangeChannel::send() {
  if (!active() || sent_ >= slots_) return {};
  const int index = sent_++;
  if (index >= static_cast<int>(outgoing_.size())) return {};
  return std::vector<Message>(ports_, outgoing_[index]);
}

std::vector<std::optional<BitString>> ExchangeChannel::take_received() {
  std::vector<std::optional<BitString>> out(ports_);
  for (std::size_t p = 0; p < ports_; ++p) {
    if (!incoming_[p].empty()) out[p] = reassemble_fragments(incoming_[p], budget_);
    incoming_[p].clear();
  }
  slots_ = 0;
  return out;
}

}  // namespace congest
