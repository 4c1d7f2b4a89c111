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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace congest {

/// Identifier of a network node. IDs are distinct non-negative integers; the
/// simulator transmits them at a fixed width of bit_width(max ID) bits.
using NodeId = std::uint64_t;

/// Dense position of a node inside a Graph, 0..n-1. Algorithms index state by
/// NodeIndex and only ever put NodeIds on the wire.
using NodeIndex = std::uint32_t;

struct Edge {
  NodeIndex u;
  NodeIndex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with distinct node IDs. Immutable once built; the
/// constructor rejects self-loops and collapses duplicate edges.
class Graph {
 public:
  Graph() = default;

  /// Nodes get IDs 0..n-1.
  Graph(std::size_t n, std::span<const Edge> edges);
  /// Nodes get the given IDs (must be distinct); edges are over indices.
  Graph(std::vector<NodeId> ids, std::span<const Edge> edges);

  static Graph from_id_edges(std::vector<NodeId> ids,
                             std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  NodeId id(NodeIndex v) const { return ids_[v]; }
  const std::vector<NodeId>& ids() const { return ids_; }
  std::optional<NodeIndex> index_of(NodeId id) const;
  NodeId max_id() const;

  /// Neighbors of v sorted by index.
  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {adjacency_[v].data(), adjacency_[v].size()};
  }
  std::size_t degree(NodeIndex v) const { return adjacency_[v].size(); }
  bool adjacent(NodeIndex u, NodeIndex v) const;

  /// Edges with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(NodeIndex u, NodeIndex v) const;

  bool connected() const;
  /// Hop distances from the given sources; unreachable nodes get SIZE_MAX.
  std::vector<std::size_t> distances_from(std::span<const NodeIndex> sources) const;

  /// Subgraph induced by `keep` (indices), preserving IDs.
  Graph induced(std::span<const NodeIndex> keep) const;
  /// Same graph with one set of edges removed.
  Graph without_edges(std::span<const std::size_t> edge_indices) const;
  /// Same graph with IDs replaced (must be distinct, one per node).
  Graph relabeled(std::vector<NodeId> ids) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void build(std::span<const Edge> edges);

  std::vector<NodeId> ids_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Disjoint union; IDs of `b` are shifted past the largest ID of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Parses the edge-list format described in docs/formats.md.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
/// Writes `g` in the same format; load_graph(write_graph(g)) == g up to
/// node order.
std::string write_graph(const Graph& g);

}  // namespace congest
