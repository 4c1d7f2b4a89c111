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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "congest/bits.hpp"
#include "congest/graph.hpp"

namespace congest {

inline constexpr int kDefaultBudgetMultiplier = 4;
inline constexpr int kDefaultMaxRounds = 1'000'000;

/// Per-edge, per-round bit budget: multiplier * unit where unit is
/// max(1, ceil(log2 n)). Every fragment spends one unit on its header.
struct BandwidthBudget {
  int unit_bits = 1;
  int multiplier = kDefaultBudgetMultiplier;

  static BandwidthBudget for_network(std::size_t n, int multiplier = kDefaultBudgetMultiplier);

  int bits_per_edge_per_round() const { return unit_bits * multiplier; }
  int header_bits() const { return unit_bits; }
  int chunk_capacity() const { return bits_per_edge_per_round() - header_bits(); }

  friend bool operator==(const BandwidthBudget&, const BandwidthBudget&) = default;
};

/// Splits a payload into physical messages of at most
/// bits_per_edge_per_round bits. Each fragment is
///   [last: 1 bit][index mod 2^(unit-1): unit-1 bits][chunk]
/// where chunk holds up to min(chunk_capacity, chunk_limit) payload bits
/// (chunk_limit 0 means no extra limit). An empty payload has no fragments.
std::vector<BitString> fragment_payload(const BitString& payload, const BandwidthBudget& budget,
                                        int chunk_limit = 0);
/// Inverse of fragment_payload. Throws ProtocolError on a malformed sequence.
BitString reassemble_fragments(std::span<const BitString> fragments, const BandwidthBudget& budget);
/// Number of fragments fragment_payload produces for `payload_bits` bits.
int fragment_count(std::size_t payload_bits, const BandwidthBudget& budget, int chunk_limit = 0);

enum class Verdict { kAccept, kReject };
const char* to_string(Verdict v);

/// Values every node knows before the first round.
struct NetworkGlobals {
  std::size_t n = 0;
  int id_width = 1;  // bits per NodeId on the wire
  BandwidthBudget budget;
  std::uint64_t trial = 0;
};

struct NodeContext {
  NodeId self = 0;
  /// Neighbor IDs in port order; inbox/outbox slot p belongs to neighbors[p].
  std::vector<NodeId> neighbors;
  NetworkGlobals globals;
  /// Seed of this node's private random stream for this trial.
  std::uint64_t random_seed = 0;
};

using Message = std::optional<BitString>;

struct StepResult {
  /// Either empty (send nothing) or one slot per port.
  std::vector<Message> outbox;
  std::optional<Verdict> output;
};

/// State machine of one node. `step` sees messages sent by neighbors in the
/// previous round (round 1 has an empty inbox). After returning an output the
/// process is never stepped again.
class NodeProcess {
 public:
  virtual ~NodeProcess() = default;
  virtual StepResult step(int round, std::span<const Message> inbox) = 0;
};

/// Factory of node processes: the distributed algorithm.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::unique_ptr<NodeProcess> spawn(const NodeContext& ctx) const = 0;
  virtual std::string name() const = 0;
  /// Number of logical rounds the algorithm is specified in, or 0.
  virtual int logical_rounds(const NetworkGlobals&) const { return 0; }
};

using RoundObserver = std::function<void(int round, NodeIndex node, const NodeProcess& process)>;

struct RunOptions {
  int budget_multiplier = kDefaultBudgetMultiplier;
  int max_rounds = kDefaultMaxRounds;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  /// When set, nodes are stepped in a seeded random order instead of by
  /// ascending ID. Results must not change.
  std::optional<std::uint64_t> shuffle_seed;
  /// Called after every node step.
  RoundObserver observer;
};

struct RunReport {
  std::string algorithm;
  Verdict decision = Verdict::kAccept;
  int rounds_used = 0;
  int logical_rounds = 0;
  std::size_t max_edge_bits = 0;
  std::vector<std::size_t> max_edge_bits_per_round;
  std::uint64_t total_bits = 0;
  int unit_bits = 1;
  int bits_per_edge_per_round = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  /// (node ID, verdict), sorted by ID.
  std::vector<std::pair<NodeId, Verdict>> outputs;

  double fragmentation_factor() const {
    return logical_rounds == 0 ? 0.0 : static_cast<double>(rounds_used) / logical_rounds;
  }
  double edge_bits_ratio() const {
    return static_cast<double>(max_edge_bits) / unit_bits;
  }
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

NetworkGlobals make_globals(const Graph& g, int budget_multiplier, std::uint64_t trial);

/// Runs `program` on every node of `g` in lock-step rounds until all nodes
/// have output. Throws BudgetExceeded when a message is larger than the
/// per-edge budget and RoundLimitExceeded when max_rounds pass first.
RunReport run(const Graph& g, const NodeProgram& program, const RunOptions& options = {});

/// Folds a later run into an accumulated report: rounds and bits add up,
/// maxima are kept, and a reject anywhere makes the total a reject.
void accumulate(RunReport& total, const RunReport& part);

/// One node's side of a sequence of logical broadcast exchanges. Each
/// exchange occupies a fixed number of physical rounds ("slots") that every
/// node agrees on in advance, so neighbors stay aligned no matter how much
/// each of them actually sends.
///
/// Usage inside NodeProcess::step: feed the inbox with `receive`; when it
/// returns true, collect `take_received()` and `begin` the next exchange;
/// finally return `send()` as the outbox.
class ExchangeChannel {
 public:
  ExchangeChannel() = default;
  ExchangeChannel(std::size_t ports, BandwidthBudget budget);

  void begin(const std::optional<BitString>& payload, int slots, int chunk_limit = 0);
  bool active() const { return slots_ > 0; }
  bool receive(std::span<const Message> inbox);
  std::vector<Message> send();
  /// Payload from each port; nullopt where the neighbor sent nothing.
  std::vector<std::optional<BitString>> take_received();

 private:
  std::size_t ports_ = 0;
  BandwidthBudget budget_;
  std::vector<BitString> outgoing_;
  std::vector<std::vector<BitString>> incoming_;
  int slots_ = 0;
  int sent_ = 0;
  int received_ = 0;
};

}  // namespace congest
