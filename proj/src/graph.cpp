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

#include "congest/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "congest/error.hpp"

namespace congest {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : ids_(n) {
  for (std::size_t i = 0; i < n; ++i) ids_[i] = i;
  build(edges);
}

Graph::Graph(std::vector<NodeId> ids, std::span<const Edge> edges) : ids_(std::move(ids)) {
  std::vector<NodeId> sorted = ids_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidGraph("node IDs are not distinct");
  }
  build(edges);
}

Graph Graph::from_id_edges(std::vector<NodeId> ids,
                           std::span<const std::pair<NodeId, NodeId>> edges) {
  std::map<NodeId, NodeIndex> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<NodeIndex>(i));
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw InvalidGraph("edge endpoint is not a declared node");
    }
    indexed.push_back({ia->second, ib->second});
  }
  return Graph(std::move(ids), indexed);
}

void Graph::build(std::span<const Edge> edges) {
  const std::size_t n = ids_.size();
  std::set<Edge> unique;
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) throw InvalidGraph("edge endpoint out of range");
    if (e.u == e.v) throw InvalidGraph("self-loop on node " + std::to_string(ids_[e.u]));
    if (e.u > e.v) std::swap(e.u, e.v);
    unique.insert(e);
  }
  edges_.assign(unique.begin(), unique.end());
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<NodeIndex> Graph::index_of(NodeId id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

NodeId Graph::max_id() const {
  return ids_.empty() ? 0 : *std::max_element(ids_.begin(), ids_.end());
}

bool Graph::adjacent(NodeIndex u, NodeIndex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> Graph::edge_index(NodeIndex u, NodeIndex v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> Graph::distances_from(std::span<const NodeIndex> sources) const {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(node_count(), kUnreached);
  std::deque<NodeIndex> queue;
  for (NodeIndex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const NodeIndex v = queue.front();
    queue.pop_front();
    for (NodeIndex w : adjacency_[v]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (node_count() == 0) return true;
  const NodeIndex root = 0;
  const auto dist = distances_from(std::span(&root, 1));
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

Graph Graph::induced(std::span<const NodeIndex> keep) const {
  std::vector<NodeIndex> position(node_count(), std::numeric_limits<NodeIndex>::max());
  std::vector<NodeId> ids;
  for (NodeIndex v : keep) {
    position[v] = static_cast<NodeIndex>(ids.size());
    ids.push_back(ids_[v]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (position[e.u] != std::numeric_limits<NodeIndex>::max() &&
        position[e.v] != std::numeric_limits<NodeIndex>::max()) {
      edges.push_back({position[e.u], position[e.v]});
    }
  }
  return Graph(std::move(ids), edges);
}

Graph Graph::without_edges(std::span<const std::size_t> edge_indices) const {
  std::vector<bool> removed(edges_.size(), false);
  for (std::size_t i : edge_indices) removed.at(i) = true;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!removed[i]) kept.push_back(edges_[i]);
  }
  return Graph(ids_, kept);
}

Graph Graph::relabeled(std::vector<NodeId> ids) const {
  if (ids.size() != ids_.size()) throw InvalidGraph("relabel needs one ID per node");
  return Graph(std::move(ids), edges_);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const NodeId shift = a.node_count() == 0 ? 0 : a.max_id() + 1;
  std::vector<NodeId> ids = a.ids();
  for (NodeId id : b.ids()) ids.push_back(id + shift);
  std::vector<Edge> edges = a.edges();
  const auto offset = static_cast<NodeIndex>(a.node_count());
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  return Graph(std::move(ids), edges);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad token '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::set<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  bool seen_data = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "p") {
      if (seen_data || header) {
        throw ParseError("line " + std::to_string(line_no) + ": header must be the first data line");
      }
      if (tokens.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": header is 'p n m'");
      header = std::pair{parse_uint(tokens[1], line_no), parse_uint(tokens[2], line_no)};
      continue;
    }
    seen_data = true;
    if (tokens.size() == 1) {
      nodes.insert(parse_uint(tokens[0], line_no));
    } else if (tokens.size() == 2) {
      const NodeId u = parse_uint(tokens[0], line_no);
      const NodeId v = parse_uint(tokens[1], line_no);
      if (u == v) throw InvalidGraph("line " + std::to_string(line_no) + ": self-loop");
      nodes.insert(u);
      nodes.insert(v);
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (header) {
    const auto [n, m] = *header;
    if (nodes.size() > n) throw ParseError("header declares fewer nodes than the edge list uses");
    if (edges.size() != m) {
      throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
    }
    for (NodeId candidate = 0; nodes.size() < n; ++candidate) nodes.insert(candidate);
  }
  return Graph::from_id_edges(std::vector<NodeId>(nodes.begin(), nodes.end()), edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << g.id(v) << '\n';
  }
  for (const Edge& e : g.edges()) out << g.id(e.u) << ' ' << g.id(e.v) << '\n';
  return out.str();
}

}  // namespace congest
