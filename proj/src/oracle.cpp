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

#include "congest/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>

#include "congest/error.hpp"

namespace congest {

namespace {

struct Embedder {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> order;            // pattern vertices in search order
  std::vector<std::optional<NodeIndex>> preset;
  std::vector<NodeIndex> image;
  std::vector<bool> used;

  Embedder(const Graph& graph, const PatternGraph& h, std::vector<std::optional<NodeIndex>> fixed)
      : g(graph), n(h.n), adj(h.n), preset(std::move(fixed)), image(h.n), used(graph.node_count(), false) {
    if (h.n > kOraclePatternCap) throw PatternTooLarge("pattern has more than 10 nodes");
    for (auto [a, b] : h.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    preset.resize(h.n);
    // Preset vertices first, then grow by most links to the placed set.
    std::vector<bool> placed(h.n, false);
    for (int v = 0; v < n; ++v) {
      if (preset[v]) {
        order.push_back(v);
        placed[v] = true;
      }
    }
    while (static_cast<int>(order.size()) < n) {
      int best = -1, best_links = -1, best_degree = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : adj[v]) links += placed[w] ? 1 : 0;
        const int degree = static_cast<int>(adj[v].size());
        if (links > best_links || (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
  }

  bool fits(int v, NodeIndex x, std::size_t depth) const {
    if (g.degree(x) < adj[v].size()) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const int w = order[i];
      if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end() && !g.adjacent(x, image[w])) return false;
    }
    return true;
  }

  /// Calls visit(image) for every embedding; stops when visit returns false.
  bool search(std::size_t depth, const std::function<bool(const std::vector<NodeIndex>&)>& visit) {
    if (depth == order.size()) return visit(image);
    const int v = order[depth];
    auto attempt = [&](NodeIndex x) {
      if (used[x] || !fits(v, x, depth)) return true;
      used[x] = true;
      image[v] = x;
      const bool go_on = search(depth + 1, visit);
      used[x] = false;
      return go_on;
    };
    if (preset[v]) return attempt(*preset[v]);
    for (NodeIndex x = 0; x < g.node_count(); ++x)
      if (!attempt(x)) return false;
    return true;
  }
};

bool embeds(const Graph& g, const PatternGraph& h, std::vector<std::optional<NodeIndex>> preset) {
  if (h.n > kOraclePatternCap) throw PatternTooLarge("pattern has more than 10 nodes");
  if (static_cast<std::size_t>(h.n) > g.node_count()) return false;
  if (h.edges.size() > g.edge_count()) return false;
  Embedder e(g, h, std::move(preset));
  bool found = false;
  e.search(0, [&](const std::vector<NodeIndex>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace

bool contains_subgraph(const Graph& g, const PatternGraph& h) { return embeds(g, h, {}); }

bool contains_h_at(const Graph& g, const HPattern& h, std::pair<NodeId, NodeId> anchor) {
  const auto x = g.index_of(anchor.first);
  const auto y = g.index_of(anchor.second);
  if (!x || !y || !g.adjacent(*x, *y)) throw AnchorNotAnEdge("anchor is not an edge of the graph");
  return embeds(g, to_pattern_graph(h), {*x, *y});
}

std::vector<std::vector<std::size_t>> copy_edge_sets(const Graph& g, const PatternGraph& h,
                                                     std::size_t cap) {
  std::set<std::vector<std::size_t>> copies;
  if (static_cast<std::size_t>(h.n) > g.node_count()) return {};
  Embedder e(g, h, {});
  e.search(0, [&](const std::vector<NodeIndex>& image) {
    std::vector<std::size_t> edges;
    for (auto [a, b] : h.edges) edges.push_back(*g.edge_index(image[a], image[b]));
    std::sort(edges.begin(), edges.end());
    copies.insert(std::move(edges));
    if (copies.size() > cap) throw TooLarge("more than " + std::to_string(cap) + " copies of the pattern");
    return true;
  });
  return {copies.begin(), copies.end()};
}

namespace {

MinDeletion by_enumeration(const Graph& g, const PatternGraph& h) {
  const std::size_t m = g.edge_count();
  if (m > kEnumerationEdgeCap) throw TooLarge("subset enumeration needs m <= 16");
  MinDeletion out;
  out.method = MinDeletionMethod::kEnumeration;
  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<std::size_t> chosen;
    std::optional<std::vector<std::size_t>> hit;
    auto rec = [&](auto&& self, std::size_t next) -> void {
      if (hit) return;
      if (chosen.size() == size) {
        if (!contains_subgraph(g.without_edges(chosen), h)) hit = chosen;
        return;
      }
      for (std::size_t e = next; e + (size - chosen.size()) <= m; ++e) {
        chosen.push_back(e);
        self(self, e + 1);
        chosen.pop_back();
        if (hit) return;
      }
    };
    rec(rec, 0);
    if (hit) {
      out.size = size;
      out.removed = *hit;
      return out;
    }
  }
  throw Error("no deletion set found");  // removing every edge always works
}

MinDeletion by_hitting_set(const Graph& g, const PatternGraph& h, std::size_t cap) {
  const auto copies = copy_edge_sets(g, h, cap);
  MinDeletion out;
  out.method = MinDeletionMethod::kHittingSet;
  std::vector<std::size_t> best(g.edge_count());
  for (std::size_t i = 0; i < best.size(); ++i) best[i] = i;
  std::vector<bool> removed(g.edge_count(), false);
  std::vector<std::size_t> current;

  auto unhit = [&](const std::vector<std::size_t>& copy) {
    return std::none_of(copy.begin(), copy.end(), [&](std::size_t e) { return removed[e]; });
  };
  // Lower bound: greedily collected pairwise disjoint unhit copies.
  auto lower_bound = [&] {
    std::vector<bool> taken(g.edge_count(), false);
    std::size_t count = 0;
    for (const auto& c : copies) {
      if (!unhit(c)) continue;
      if (std::any_of(c.begin(), c.end(), [&](std::size_t e) { return taken[e]; })) continue;
      for (std::size_t e : c) taken[e] = true;
      ++count;
    }
    return count;
  };
  auto rec = [&](auto&& self) -> void {
    const auto it = std::find_if(copies.begin(), copies.end(), unhit);
    if (it == copies.end()) {
      if (current.size() < best.size()) best = current;
      return;
    }
    if (current.size() + lower_bound() >= best.size()) return;
    for (std::size_t e : *it) {
      removed[e] = true;
      current.push_back(e);
      self(self);
      current.pop_back();
      removed[e] = false;
    }
  };
  if (copies.empty()) best.clear();
  else rec(rec);

  std::sort(best.begin(), best.end());
  if (contains_subgraph(g.without_edges(best), h)) throw Error("hitting set certificate failed");
  out.size = best.size();
  out.removed = best;
  return out;
}

}  // namespace

MinDeletion min_deletion(const Graph& g, const PatternGraph& h, MinDeletionMethod method,
                         std::size_t copy_cap) {
  if (h.n > kOraclePatternCap) throw PatternTooLarge("pattern has more than 10 nodes");
  if (method == MinDeletionMethod::kAuto) {
    method = g.edge_count() <= kEnumerationEdgeCap ? MinDeletionMethod::kEnumeration
                                                   : MinDeletionMethod::kHittingSet;
  }
  return method == MinDeletionMethod::kEnumeration ? by_enumeration(g, h)
                                                   : by_hitting_set(g, h, copy_cap);
}

std::size_t min_edges_to_h_free(const Graph& g, const PatternGraph& h) {
  return min_deletion(g, h).size;
}

bool is_eps_far(const Graph& g, const PatternGraph& h, double eps) {
  return static_cast<double>(min_edges_to_h_free(g, h)) >= eps * static_cast<double>(g.edge_count());
}

Packing count_edge_disjoint_copies(const Graph& g, const PatternGraph& h, std::size_t copy_cap) {
  if (h.n > kOraclePatternCap) throw PatternTooLarge("pattern has more than 10 nodes");
  const auto copies = copy_edge_sets(g, h, copy_cap);
  Packing out;
  std::vector<bool> taken(g.edge_count(), false);
  auto free_copy = [&](const std::vector<std::size_t>& c) {
    return std::none_of(c.begin(), c.end(), [&](std::size_t e) { return taken[e]; });
  };
  auto take = [&](const std::vector<std::size_t>& c, bool value) {
    for (std::size_t e : c) taken[e] = value;
  };

  if (g.edge_count() > kEnumerationEdgeCap || h.edges.empty()) {
    for (const auto& c : copies) {
      if (!free_copy(c)) continue;
      take(c, true);
      ++out.count;
    }
    out.exact = false;
    return out;
  }

  std::size_t best = 0, current = 0;
  const std::size_t per_copy = h.edges.size();
  auto rec = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, current);
    const auto free_edges = static_cast<std::size_t>(std::count(taken.begin(), taken.end(), false));
    if (current + free_edges / per_copy <= best) return;
    for (std::size_t i = from; i < copies.size(); ++i) {
      if (!free_copy(copies[i])) continue;
      take(copies[i], true);
      ++current;
      self(self, i + 1);
      --current;
      take(copies[i], false);
    }
  };
  rec(rec, 0);
  out.count = best;
  out.exact = true;
  return out;
}

}  // namespace congest
