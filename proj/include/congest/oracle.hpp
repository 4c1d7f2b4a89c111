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
#include <utility>
#include <vector>

#include "congest/graph.hpp"
#include "congest/pattern.hpp"

namespace congest {

inline constexpr int kOraclePatternCap = 10;
inline constexpr std::size_t kEnumerationEdgeCap = 16;
inline constexpr std::size_t kDefaultCopyCap = 200'000;

/// Subgraph (not induced) containment by backtracking over injective maps.
/// Throws PatternTooLarge above kOraclePatternCap pattern nodes.
bool contains_subgraph(const Graph& g, const PatternGraph& h);

/// True iff H embeds with x on anchor.first and y on anchor.second.
/// Throws AnchorNotAnEdge.
bool contains_h_at(const Graph& g, const HPattern& h, std::pair<NodeId, NodeId> anchor);

/// Edge-index sets of all copies of h in g, sorted and distinct. Throws
/// TooLarge once more than `cap` distinct copies exist.
std::vector<std::vector<std::size_t>> copy_edge_sets(const Graph& g, const PatternGraph& h,
                                                     std::size_t cap = kDefaultCopyCap);

enum class MinDeletionMethod { kAuto, kEnumeration, kHittingSet };

struct MinDeletion {
  std::size_t size = 0;
  /// Edge indices whose removal leaves g H-free.
  std::vector<std::size_t> removed;
  MinDeletionMethod method = MinDeletionMethod::kAuto;
};

/// Exact minimum deletion. Enumeration tries edge subsets by size (m <= 16);
/// the hitting-set route branches on the edges of an unhit copy and checks
/// its certificate with contains_subgraph. Throws TooLarge when the chosen
/// route cannot run.
MinDeletion min_deletion(const Graph& g, const PatternGraph& h,
                         MinDeletionMethod method = MinDeletionMethod::kAuto,
                         std::size_t copy_cap = kDefaultCopyCap);
std::size_t min_edges_to_h_free(const Graph& g, const PatternGraph& h);

/// eps-far iff at least eps*m deletions are needed.
bool is_eps_far(const Graph& g, const PatternGraph& h, double eps);

struct Packing {
  std::size_t count = 0;
  bool exact = false;
};

/// Maximum number of pairwise edge-disjoint copies: exact for m <= 16,
/// a greedy lower bound otherwise.
Packing count_edge_disjoint_copies(const Graph& g, const PatternGraph& h,
                                   std::size_t copy_cap = kDefaultCopyCap);

}  // namespace congest
