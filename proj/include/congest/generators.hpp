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
#include <string>
#include <vector>

#include "congest/graph.hpp"
#include "congest/pattern.hpp"

namespace congest {

// Named families.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph empty_graph(std::size_t n);

/// Patterns used throughout tests and examples.
HPattern c4_h_pattern();
HPattern k4_h_pattern();

/// Uniform random simple graph with exactly m edges, IDs 0..n-1.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random host with `host_m` edges containing one planted copy of `pattern`
/// on randomly chosen distinct nodes: the pattern edges are placed first and
/// the remaining edges are drawn uniformly from the missing pairs.
Graph gen_planted(std::size_t host_n, std::size_t host_m, const PatternGraph& pattern,
                  std::uint64_t seed);

/// `copies` vertex-disjoint copies of H. Each copy needs at least one edge
/// deletion, and m = copies * |E(H)|, so the result is eps-far from H-free for
/// every eps <= 1/|E(H)|.
Graph gen_far_instance(const HPattern& h, std::size_t copies);

/// Random graph whose connected components all have fewer than `k` nodes, so
/// it is free of every connected k-node pattern. Each component is a random
/// connected graph on its node block with extra edges at density `density`.
Graph gen_component_bounded(std::size_t n, std::size_t max_component, double density,
                            std::uint64_t seed);

/// Replaces IDs with distinct random values in [0, n^4).
Graph scramble_ids(const Graph& g, std::uint64_t seed);

/// Graph on nodes 0..n-1 whose edges are the set bits of `mask` over the
/// pairs (0,1), (0,2), ..., (n-2,n-1) in lexicographic order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t pair_count(std::size_t n);

/// All labeled trees on 1..k (Cayley: k^(k-2) of them for k >= 2).
std::vector<std::vector<LabelEdge>> all_labeled_trees(int k);
/// One representative per isomorphism class of trees on k labels.
std::vector<std::vector<LabelEdge>> all_unlabeled_trees(int k);
/// Isomorphism-invariant code of an unrooted tree.
std::string tree_canonical_code(int k, const std::vector<LabelEdge>& edges);

}  // namespace congest
