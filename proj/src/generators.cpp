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

#include "congest/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "congest/error.hpp"
#include "congest/rng.hpp"

namespace congest {

Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({NodeIndex(i - 1), NodeIndex(i)});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParams("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({NodeIndex(i), NodeIndex((i + 1) % n)});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({NodeIndex(i), NodeIndex(j)});
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, NodeIndex(i)});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({NodeIndex(i), NodeIndex(a + j)});
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i < 5; ++i) {
    edges.push_back({i, NodeIndex((i + 1) % 5)});
    edges.push_back({i, NodeIndex(i + 5)});
    edges.push_back({NodeIndex(i + 5), NodeIndex((i + 2) % 5 + 5)});
  }
  return Graph(10, edges);
}

HPattern c4_h_pattern() {
  // x - y - z2 - z1 - x
  return HPattern(RootedPattern::from_edges(2, {{1, 2}}, 1),
                  {{AnchorEnd::kX, 1}, {AnchorEnd::kY, 2}});
}

HPattern k4_h_pattern() {
  return HPattern(RootedPattern::from_edges(2, {{1, 2}}, 1),
                  {{AnchorEnd::kX, 1}, {AnchorEnd::kX, 2}, {AnchorEnd::kY, 1}, {AnchorEnd::kY, 2}});
}

namespace {

/// Adds `count` uniformly random missing pairs to `present`.
void add_random_edges(std::size_t n, std::size_t count, SplitMix64& rng,
                      std::set<std::pair<NodeIndex, NodeIndex>>& present) {
  const std::uint64_t total = pair_count(n);
  if (present.size() + count > total) throw InvalidParams("too many edges for the node count");
  if (count == 0) return;
  if (2 * (present.size() + count) <= total) {
    while (count > 0) {
      auto a = static_cast<NodeIndex>(rng.uniform_below(n));
      auto b = static_cast<NodeIndex>(rng.uniform_below(n));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (present.emplace(a, b).second) --count;
    }
    return;
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> missing;
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = a + 1; b < n; ++b)
      if (!present.count({a, b})) missing.emplace_back(a, b);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.uniform_below(missing.size() - i);
    std::swap(missing[i], missing[j]);
    present.insert(missing[i]);
  }
}

Graph from_pairs(std::size_t n, const std::set<std::pair<NodeIndex, NodeIndex>>& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Graph(n, edges);
}

}  // namespace

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(mix64(seed));
  std::set<std::pair<NodeIndex, NodeIndex>> pairs;
  add_random_edges(n, m, rng, pairs);
  return from_pairs(n, pairs);
}

Graph gen_planted(std::size_t host_n, std::size_t host_m, const PatternGraph& pattern,
                  std::uint64_t seed) {
  if (host_n < static_cast<std::size_t>(pattern.n)) throw InvalidParams("host has fewer nodes than the pattern");
  if (host_m < pattern.edge_count()) throw InvalidParams("host has fewer edges than the pattern");
  if (host_m > pair_count(host_n)) throw InvalidParams("too many edges for the node count");

  SplitMix64 rng(mix64(seed ^ 0x706c616e74ULL));
  std::vector<NodeIndex> nodes(host_n);
  std::iota(nodes.begin(), nodes.end(), 0);
  for (int i = 0; i < pattern.n; ++i) {
    const std::size_t j = i + rng.uniform_below(host_n - i);
    std::swap(nodes[i], nodes[j]);
  }
  std::set<std::pair<NodeIndex, NodeIndex>> pairs;
  for (auto [a, b] : pattern.edges) {
    NodeIndex u = nodes[a];
    NodeIndex v = nodes[b];
    if (u > v) std::swap(u, v);
    pairs.emplace(u, v);
  }
  add_random_edges(host_n, host_m - pairs.size(), rng, pairs);
  return from_pairs(host_n, pairs);
}

Graph gen_far_instance(const HPattern& h, std::size_t copies) {
  if (copies < 1) throw InvalidParams("need at least one copy");
  const Graph one = to_pattern_graph(h).to_graph();
  Graph out = one;
  for (std::size_t i = 1; i < copies; ++i) out = disjoint_union(out, one);
  return out;
}

Graph gen_component_bounded(std::size_t n, std::size_t max_component, double density,
                            std::uint64_t seed) {
  if (max_component < 1) throw InvalidParams("components need at least one node");
  SplitMix64 rng(mix64(seed ^ 0x636f6d70ULL));
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i + 1 < n; ++i) std::swap(order[i], order[i + rng.uniform_below(n - i)]);

  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start < n) {
    const std::size_t size = std::min(n - start, 1 + rng.uniform_below(max_component));
    // Random spanning tree on the block, then extra pairs with probability `density`.
    for (std::size_t i = 1; i < size; ++i) {
      edges.push_back({order[start + i], order[start + rng.uniform_below(i)]});
    }
    const auto threshold = static_cast<std::uint64_t>(density * 1'000'000.0);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (rng.uniform_below(1'000'000) < threshold) edges.push_back({order[start + i], order[start + j]});
    start += size;
  }
  return Graph(n, edges);
}

Graph scramble_ids(const Graph& g, std::uint64_t seed) {
  const std::uint64_t n = std::max<std::uint64_t>(g.node_count(), 2);
  const std::uint64_t range = n * n * n * n;
  SplitMix64 rng(mix64(seed ^ 0x73637261ULL));
  std::unordered_set<NodeId> used;
  std::vector<NodeId> ids;
  while (ids.size() < g.node_count()) {
    const NodeId id = rng.uniform_below(range);
    if (used.insert(id).second) ids.push_back(id);
  }
  return g.relabeled(std::move(ids));
}

std::uint64_t pair_count(std::size_t n) { return n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = a + 1; b < n; ++b, ++bit)
      if ((mask >> bit) & 1U) edges.push_back({a, b});
  return Graph(n, edges);
}

std::vector<std::vector<LabelEdge>> all_labeled_trees(int k) {
  if (k < 1) throw InvalidParams("k must be positive");
  if (k == 1) return {{}};
  if (k == 2) return {{{1, 2}}};
  std::vector<std::vector<LabelEdge>> out;
  std::vector<int> code(k - 2, 1);
  for (;;) {
    // Prufer decoding.
    std::vector<int> degree(k + 1, 1);
    for (int c : code) ++degree[c];
    std::vector<LabelEdge> edges;
    for (int c : code) {
      for (Label leaf = 1; leaf <= k; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
          --degree[leaf];
          --degree[c];
          break;
        }
      }
    }
    std::vector<Label> last;
    for (Label l = 1; l <= k; ++l)
      if (degree[l] == 1) last.push_back(l);
    edges.emplace_back(last[0], last[1]);
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));

    int pos = k - 3;
    while (pos >= 0 && code[pos] == k) code[pos--] = 1;
    if (pos < 0) break;
    ++code[pos];
  }
  return out;
}

namespace {

std::string ahu_code(const RootedPattern& t, Label v) {
  std::vector<std::string> parts;
  for (Label c : t.children(v)) parts.push_back(ahu_code(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

}  // namespace

std::string tree_canonical_code(int k, const std::vector<LabelEdge>& edges) {
  // Root at each center (one or two) and keep the smaller rooted code.
  const RootedPattern probe = RootedPattern::centered(k, edges);
  std::string best;
  for (Label l = 1; l <= k; ++l) {
    const RootedPattern t = RootedPattern::from_edges(k, edges, l);
    if (t.height() != probe.height()) continue;
    const std::string code = ahu_code(t, l);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<std::vector<LabelEdge>> all_unlabeled_trees(int k) {
  std::set<std::string> seen;
  std::vector<std::vector<LabelEdge>> out;
  for (auto& edges : all_labeled_trees(k)) {
    if (seen.insert(tree_canonical_code(k, edges)).second) out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace congest
