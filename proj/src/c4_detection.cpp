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

#include "congest/c4_detection.hpp"

#include <algorithm>
#include <numeric>

#include "congest/error.hpp"

namespace congest {

std::size_t c4_threshold(std::size_t n) {
  std::size_t s = 0;
  while (s * s < 2 * n) ++s;
  return s;
}

namespace {

class C4Process : public NodeProcess, public C4StateHolder {
 public:
  explicit C4Process(const NodeContext& ctx)
      : ctx_(ctx),
        threshold_(c4_threshold(ctx.globals.n)),
        degree_width_(std::max(1, bit_width_of(ctx.globals.n))),
        channel_(ctx.neighbors.size(), ctx.globals.budget) {}

  StepResult step(int round, std::span<const Message> inbox) override {
    StepResult result;
    const std::size_t ports = ctx_.neighbors.size();
    if (round == 1) {
      BitString id;
      id.push(ctx_.self, ctx_.globals.id_width);
      result.outbox.assign(ports, id);
      return result;
    }
    if (round == 2) {
      for (std::size_t p = 0; p < ports; ++p) {
        if (!inbox[p] || BitReader(*inbox[p]).read(ctx_.globals.id_width) != ctx_.neighbors[p]) {
          throw ProtocolError("ID exchange mismatch");
        }
      }
      BitString degree;
      degree.push(ports, degree_width_);
      result.outbox.assign(ports, degree);
      return result;
    }
    if (round == 3) {
      state_.neighbor_degrees.resize(ports);
      for (std::size_t p = 0; p < ports; ++p) {
        if (!inbox[p]) throw ProtocolError("missing degree");
        state_.neighbor_degrees[p] = BitReader(*inbox[p]).read(degree_width_);
        state_.degree_sum += state_.neighbor_degrees[p];
      }
      std::vector<std::size_t> order(ports);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (state_.neighbor_degrees[a] != state_.neighbor_degrees[b]) {
          return state_.neighbor_degrees[a] > state_.neighbor_degrees[b];
        }
        return ctx_.neighbors[a] < ctx_.neighbors[b];
      });
      order.resize(std::min(ports, threshold_));
      std::optional<BitString> payload;
      for (std::size_t p : order) {
        state_.s_set.push_back(ctx_.neighbors[p]);
        if (!payload) payload.emplace();
        payload->push(ctx_.neighbors[p], ctx_.globals.id_width);
      }
      channel_.begin(payload, static_cast<int>(std::max<std::size_t>(threshold_, 1)), ctx_.globals.id_width);
      result.outbox = channel_.send();
      return result;
    }
    if (!channel_.receive(inbox)) {
      result.outbox = channel_.send();
      return result;
    }
    const auto received = channel_.take_received();
    state_.neighbor_s_sets.resize(ports);
    for (std::size_t p = 0; p < ports; ++p) {
      if (!received[p]) continue;
      BitReader reader(*received[p]);
      while (!reader.at_end()) state_.neighbor_s_sets[p].push_back(reader.read(ctx_.globals.id_width));
    }
    state_.degree_rule = state_.degree_sum >= 2 * ctx_.globals.n + 1;
    state_.s_rule = common_listing();
    result.output = state_.degree_rule || state_.s_rule ? Verdict::kReject : Verdict::kAccept;
    return result;
  }

  const C4State& c4_state() const override { return state_; }

 private:
  bool common_listing() const {
    std::vector<std::pair<NodeId, std::size_t>> listed;  // (w, port)
    for (std::size_t p = 0; p < state_.neighbor_s_sets.size(); ++p)
      for (NodeId w : state_.neighbor_s_sets[p])
        if (w != ctx_.self) listed.emplace_back(w, p);
    std::sort(listed.begin(), listed.end());
    for (std::size_t i = 1; i < listed.size(); ++i) {
      if (listed[i].first == listed[i - 1].first && listed[i].second != listed[i - 1].second) return true;
    }
    return false;
  }

  NodeContext ctx_;
  std::size_t threshold_;
  int degree_width_;
  ExchangeChannel channel_;
  C4State state_;
};

}  // namespace

std::unique_ptr<NodeProcess> C4Program::spawn(const NodeContext& ctx) const {
  return std::make_unique<C4Process>(ctx);
}

int C4Program::logical_rounds(const NetworkGlobals& globals) const {
  return static_cast<int>(std::max<std::size_t>(c4_threshold(globals.n), 1)) + 3;
}

RunReport detect_c4(const Graph& g, const RunOptions& run_options) {
  return run(g, C4Program(), run_options);
}

}  // namespace congest
