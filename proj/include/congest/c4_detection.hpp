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
#include <vector>

#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

/// ceil(sqrt(2n)): the size cap of S(u) and the heaviness threshold.
std::size_t c4_threshold(std::size_t n);

struct C4State {
  std::vector<std::size_t> neighbor_degrees;  // by port
  std::uint64_t degree_sum = 0;
  /// Largest-degree neighbors, by (degree desc, ID asc), at most c4_threshold.
  std::vector<NodeId> s_set;
  std::vector<std::vector<NodeId>> neighbor_s_sets;  // by port
  bool degree_rule = false;
  bool s_rule = false;
};

class C4StateHolder {
 public:
  virtual ~C4StateHolder() = default;
  virtual const C4State& c4_state() const = 0;
};

/// IDs, degrees, then S-sets one ID per round over c4_threshold(n) rounds; a
/// node rejects if its neighbors' degrees sum to at least 2n+1 or two
/// distinct neighbors list a common node other than itself.
class C4Program : public NodeProgram {
 public:
  std::unique_ptr<NodeProcess> spawn(const NodeContext& ctx) const override;
  std::string name() const override { return "c4"; }
  int logical_rounds(const NetworkGlobals& globals) const override;
};

RunReport detect_c4(const Graph& g, const RunOptions& run_options = {});

}  // namespace congest
