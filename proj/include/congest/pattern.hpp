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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

/// Label of a pattern-tree vertex, 1..k.
using Label = int;
using LabelEdge = std::pair<Label, Label>;

/// A tree T on labels 1..k rooted at `root`. For each label l the subtree
/// T_l hanging below l is a "shape"; depth(l) is the height of T_l (0 for
/// leaves) and shape_size(l) = |V(T_l)|.
class RootedPattern {
 public:
  RootedPattern() = default;

  /// Builds from k-1 undirected edges over 1..k, oriented away from `root`.
  static RootedPattern from_edges(int k, const std::vector<LabelEdge>& edges, Label root);
  /// Same, rooted at the center (minimum eccentricity, smallest label on ties).
  static RootedPattern centered(int k, const std::vector<LabelEdge>& edges);

  int size() const { return k_; }
  Label root() const { return root_; }
  std::optional<Label> parent(Label l) const;
  const std::vector<Label>& children(Label l) const { return children_[l]; }
  int depth(Label l) const { return depth_[l]; }
  int shape_size(Label l) const { return shape_size_[l]; }
  bool is_leaf(Label l) const { return children_[l].empty(); }
  int height() const { return depth_[root_]; }

  /// Labels of T_l in canonical preorder: l first, then the subtree of each
  /// child in ascending label order.
  std::vector<Label> preorder(Label l) const;
  /// Position in preorder(l) of each position's parent; -1 for the root.
  std::vector<int> preorder_parents(Label l) const;
  /// Undirected edges (parent, child), sorted.
  std::vector<LabelEdge> edges() const;

  RootedPattern rerooted(Label new_root) const { return from_edges(k_, edges(), new_root); }

  friend bool operator==(const RootedPattern&, const RootedPattern&) = default;

 private:
  int k_ = 0;
  Label root_ = 0;
  std::vector<Label> parent_;  // index by label; 0 = none
  std::vector<std::vector<Label>> children_;
  std::vector<int> depth_;
  std::vector<int> shape_size_;
};

/// Label minimizing eccentricity in the tree, ties to the smallest label.
Label center_of(int k, const std::vector<LabelEdge>& edges);

struct ShapeInfo {
  Label label;
  int depth;
  std::vector<Label> children;
  friend bool operator==(const ShapeInfo&, const ShapeInfo&) = default;
};

/// One entry per label, ordered by (depth, label).
std::vector<ShapeInfo> shapes(const RootedPattern& t);

/// Relabels T so that the root is k and the remaining labels decrease along a
/// BFS from the root (children visited in ascending old-label order). Every
/// child then carries a smaller label than its parent.
RootedPattern bfs_labeled(const RootedPattern& t);
/// Root is k and every label on a BFS level exceeds every label one level down.
bool is_bfs_labeled(const RootedPattern& t);

enum class AnchorEnd { kX, kY };

struct CrossEdge {
  AnchorEnd end;
  Label label;
  friend auto operator<=>(const CrossEdge&, const CrossEdge&) = default;
};

/// A tree-plus-edge pattern H = (f, T, cross): anchor edge f = {x, y}, tree T
/// on labels 1..k (the vertices z_1..z_k), and cross edges joining x or y to
/// tree vertices. V(H) = {x, y, z_1..z_k}, all distinct.
class HPattern {
 public:
  HPattern() = default;
  HPattern(RootedPattern tree, std::vector<CrossEdge> cross,
           std::string x_name = "x", std::string y_name = "y");

  const RootedPattern& tree() const { return tree_; }
  const std::vector<CrossEdge>& cross_edges() const { return cross_; }
  const std::string& x_name() const { return x_name_; }
  const std::string& y_name() const { return y_name_; }

  /// |E(H)| = 1 + (k - 1) + |cross|.
  std::size_t edge_count() const {
    return 1 + static_cast<std::size_t>(tree_.size() - 1) + cross_.size();
  }
  std::size_t node_count() const { return 2 + static_cast<std::size_t>(tree_.size()); }
  bool linked(AnchorEnd end, Label l) const;

  /// Tree root used by the anchored search: the cross-edge endpoint whose
  /// shape has the smallest height (smallest label on ties). Every tree vertex
  /// is then within height + 1 hops of the anchor.
  Label anchored_root() const;

 private:
  RootedPattern tree_;
  std::vector<CrossEdge> cross_;
  std::string x_name_ = "x";
  std::string y_name_ = "y";
};

/// Generic small pattern for the sequential oracle: vertices 0..n-1.
struct PatternGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static PatternGraph from_graph(const Graph& g);
  Graph to_graph() const;
  std::size_t edge_count() const { return edges.size(); }
};

/// Tree labels 1..k become vertices 0..k-1.
PatternGraph to_pattern_graph(const RootedPattern& t);
/// x -> 0, y -> 1, tree label l -> l + 1.
PatternGraph to_pattern_graph(const HPattern& h);

/// Contents of a pattern file (docs/formats.md).
struct PatternFile {
  int k = 0;
  std::optional<Label> root;
  std::vector<LabelEdge> tree_edges;  // (child, parent) as written
  std::optional<std::pair<std::string, std::string>> anchor;
  std::vector<CrossEdge> cross;

  /// The tree rooted at the declared root, or at its center if none.
  RootedPattern rooted() const;
  bool has_anchor() const { return anchor.has_value(); }
  /// Throws InvalidPattern if the file has no anchor section.
  HPattern h_pattern() const;
};

PatternFile load_pattern(std::string_view text);
PatternFile load_pattern_file(const std::string& path);
std::string write_pattern(const RootedPattern& t);
std::string write_pattern(const HPattern& h);

}  // namespace congest
