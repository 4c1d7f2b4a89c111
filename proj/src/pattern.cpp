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

#include "congest/pattern.hpp"

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

namespace {

std::vector<std::vector<Label>> adjacency_of(int k, const std::vector<LabelEdge>& edges) {
  if (k < 1) throw InvalidPattern("pattern tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != k - 1) {
    throw InvalidPattern("a tree on " + std::to_string(k) + " labels has " +
                         std::to_string(k - 1) + " edges, got " + std::to_string(edges.size()));
  }
  std::vector<std::vector<Label>> adj(k + 1);
  for (auto [a, b] : edges) {
    if (a < 1 || a > k || b < 1 || b > k) throw InvalidPattern("label out of range 1..k");
    if (a == b) throw InvalidPattern("self-loop in pattern tree");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> bfs_depths(const std::vector<std::vector<Label>>& adj, Label from) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<Label> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Label v = queue.front();
    queue.pop_front();
    for (Label w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

RootedPattern RootedPattern::from_edges(int k, const std::vector<LabelEdge>& edges, Label root) {
  const auto adj = adjacency_of(k, edges);
  if (root < 1 || root > k) throw InvalidPattern("root label out of range");

  RootedPattern t;
  t.k_ = k;
  t.root_ = root;
  t.parent_.assign(k + 1, 0);
  t.children_.assign(k + 1, {});
  t.depth_.assign(k + 1, 0);
  t.shape_size_.assign(k + 1, 1);

  std::vector<Label> order;
  std::vector<bool> seen(k + 1, false);
  std::deque<Label> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Label v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (Label w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent_[w] = v;
      t.children_[v].push_back(w);
      queue.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != k) throw InvalidPattern("pattern edges do not form a tree");

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Label v = *it;
    for (Label c : t.children_[v]) {
      t.depth_[v] = std::max(t.depth_[v], t.depth_[c] + 1);
      t.shape_size_[v] += t.shape_size_[c];
    }
  }
  return t;
}

Label center_of(int k, const std::vector<LabelEdge>& edges) {
  const auto adj = adjacency_of(k, edges);
  Label best = 1;
  int best_ecc = std::numeric_limits<int>::max();
  for (Label l = 1; l <= k; ++l) {
    const auto dist = bfs_depths(adj, l);
    const int ecc = *std::max_element(dist.begin() + 1, dist.end());
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = l;
    }
  }
  return best;
}

RootedPattern RootedPattern::centered(int k, const std::vector<LabelEdge>& edges) {
  return from_edges(k, edges, center_of(k, edges));
}

std::optional<Label> RootedPattern::parent(Label l) const {
  if (parent_[l] == 0) return std::nullopt;
  return parent_[l];
}

std::vector<Label> RootedPattern::preorder(Label l) const {
  std::vector<Label> out;
  std::vector<Label> stack{l};
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<int> RootedPattern::preorder_parents(Label l) const {
  const auto order = preorder(l);
  std::vector<int> position(k_ + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<int> parents(order.size(), -1);
  for (std::size_t i = 1; i < order.size(); ++i) parents[i] = position[parent_[order[i]]];
  return parents;
}

std::vector<LabelEdge> RootedPattern::edges() const {
  std::vector<LabelEdge> out;
  for (Label l = 1; l <= k_; ++l) {
    if (parent_[l] != 0) out.emplace_back(std::min(l, parent_[l]), std::max(l, parent_[l]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ShapeInfo> shapes(const RootedPattern& t) {
  std::vector<ShapeInfo> out;
  for (Label l = 1; l <= t.size(); ++l) out.push_back({l, t.depth(l), t.children(l)});
  std::stable_sort(out.begin(), out.end(),
                   [](const ShapeInfo& a, const ShapeInfo& b) { return a.depth < b.depth; });
  return out;
}

RootedPattern bfs_labeled(const RootedPattern& t) {
  const int k = t.size();
  std::vector<Label> relabel(k + 1, 0);
  std::deque<Label> queue{t.root()};
  Label next = k;
  while (!queue.empty()) {
    const Label v = queue.front();
    queue.pop_front();
    relabel[v] = next--;
    for (Label c : t.children(v)) queue.push_back(c);
  }
  std::vector<LabelEdge> edges;
  for (auto [a, b] : t.edges()) edges.emplace_back(relabel[a], relabel[b]);
  return RootedPattern::from_edges(k, edges, k);
}

bool is_bfs_labeled(const RootedPattern& t) {
  if (t.root() != t.size()) return false;
  // Every label on one BFS level must exceed every label on the next.
  std::vector<Label> level{t.root()};
  while (!level.empty()) {
    std::vector<Label> next;
    for (Label v : level) next.insert(next.end(), t.children(v).begin(), t.children(v).end());
    if (!next.empty() && *std::max_element(next.begin(), next.end()) > *std::min_element(level.begin(), level.end())) {
      return false;
    }
    level = std::move(next);
  }
  return true;
}

HPattern::HPattern(RootedPattern tree, std::vector<CrossEdge> cross, std::string x_name,
                   std::string y_name)
    : tree_(std::move(tree)), x_name_(std::move(x_name)), y_name_(std::move(y_name)) {
  if (tree_.size() < 1) throw InvalidPattern("H needs a non-empty tree");
  if (x_name_ == y_name_) throw InvalidPattern("anchor endpoints need distinct names");
  std::sort(cross.begin(), cross.end());
  cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
  for (const CrossEdge& c : cross) {
    if (c.label < 1 || c.label > tree_.size()) throw InvalidPattern("cross edge label out of range");
  }
  // A copy anchored at f is found by a search local to f; with no cross edge
  // the tree could sit anywhere in the network.
  if (cross.empty()) throw InvalidPattern("H must connect its tree to the anchor edge");
  cross_ = std::move(cross);
}

bool HPattern::linked(AnchorEnd end, Label l) const {
  return std::binary_search(cross_.begin(), cross_.end(), CrossEdge{end, l});
}

Label HPattern::anchored_root() const {
  Label best = 0;
  int best_height = std::numeric_limits<int>::max();
  std::set<Label> endpoints;
  for (const CrossEdge& c : cross_) endpoints.insert(c.label);
  for (Label l : endpoints) {
    const int height = tree_.rerooted(l).height();
    if (height < best_height) {
      best_height = height;
      best = l;
    }
  }
  return best;
}

PatternGraph PatternGraph::from_graph(const Graph& g) {
  PatternGraph p;
  p.n = static_cast<int>(g.node_count());
  for (const Edge& e : g.edges()) p.edges.emplace_back(e.u, e.v);
  return p;
}

Graph PatternGraph::to_graph() const {
  std::vector<Edge> list;
  for (auto [a, b] : edges) list.push_back({static_cast<NodeIndex>(a), static_cast<NodeIndex>(b)});
  return Graph(static_cast<std::size_t>(n), list);
}

PatternGraph to_pattern_graph(const RootedPattern& t) {
  PatternGraph p;
  p.n = t.size();
  for (auto [a, b] : t.edges()) p.edges.emplace_back(a - 1, b - 1);
  return p;
}

PatternGraph to_pattern_graph(const HPattern& h) {
  PatternGraph p;
  p.n = static_cast<int>(h.node_count());
  p.edges.emplace_back(0, 1);
  for (auto [a, b] : h.tree().edges()) p.edges.emplace_back(a + 1, b + 1);
  for (const CrossEdge& c : h.cross_edges()) {
    p.edges.emplace_back(c.end == AnchorEnd::kX ? 0 : 1, c.label + 1);
  }
  return p;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens_of(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_label(const std::string& token, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("pattern line " + std::to_string(line_no) + ": bad label '" + token + "'");
  }
  return value;
}

}  // namespace

PatternFile load_pattern(std::string_view text) {
  PatternFile file;
  enum class Section { kNone, kTree, kCross } section = Section::kNone;
  std::optional<int> declared_k;
  std::vector<std::pair<std::string, Label>> raw_cross;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      const std::string key(trim(line.substr(0, colon)));
      const auto values = tokens_of(line.substr(colon + 1));
      section = Section::kNone;
      if (key == "tree" || key == "cross") {
        if (!values.empty()) throw ParseError("pattern line " + std::to_string(line_no) + ": '" + key + ":' takes no value");
        section = key == "tree" ? Section::kTree : Section::kCross;
      } else if (key == "root" && values.size() == 1) {
        file.root = parse_label(values[0], line_no);
      } else if (key == "k" && values.size() == 1) {
        declared_k = parse_label(values[0], line_no);
      } else if (key == "anchor" && values.size() == 2) {
        file.anchor = std::pair{values[0], values[1]};
      } else {
        throw ParseError("pattern line " + std::to_string(line_no) + ": unknown or malformed key '" + key + "'");
      }
      continue;
    }

    const auto values = tokens_of(line);
    if (values.size() != 2) throw ParseError("pattern line " + std::to_string(line_no) + ": expected two tokens");
    if (section == Section::kTree) {
      file.tree_edges.emplace_back(parse_label(values[0], line_no), parse_label(values[1], line_no));
    } else if (section == Section::kCross) {
      raw_cross.emplace_back(values[0], parse_label(values[1], line_no));
    } else {
      throw ParseError("pattern line " + std::to_string(line_no) + ": data outside a section");
    }
  }

  file.k = static_cast<int>(file.tree_edges.size()) + 1;
  if (declared_k && *declared_k != file.k) {
    throw InvalidPattern("declared k=" + std::to_string(*declared_k) + " but tree has " +
                         std::to_string(file.k) + " labels");
  }
  if (!raw_cross.empty() && !file.anchor) throw InvalidPattern("cross edges need an anchor line");
  for (const auto& [name, label] : raw_cross) {
    if (name == file.anchor->first) {
      file.cross.push_back({AnchorEnd::kX, label});
    } else if (name == file.anchor->second) {
      file.cross.push_back({AnchorEnd::kY, label});
    } else {
      throw InvalidPattern("cross edge endpoint '" + name + "' is not an anchor name");
    }
  }
  // Validates the tree and, when a root is declared, the child/parent orientation.
  const RootedPattern tree = file.rooted();
  if (file.root) {
    for (auto [child, parent] : file.tree_edges) {
      if (tree.parent(child) != parent) {
        throw InvalidPattern("tree line '" + std::to_string(child) + " " + std::to_string(parent) +
                             "' is not a child-parent pair under root " + std::to_string(*file.root));
      }
    }
  }
  return file;
}

RootedPattern PatternFile::rooted() const {
  return root ? RootedPattern::from_edges(k, tree_edges, *root)
              : RootedPattern::centered(k, tree_edges);
}

HPattern PatternFile::h_pattern() const {
  if (!anchor) throw InvalidPattern("pattern file has no anchor line");
  return HPattern(rooted(), cross, anchor->first, anchor->second);
}

PatternFile load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pattern file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_pattern(buffer.str());
}

std::string write_pattern(const RootedPattern& t) {
  std::ostringstream out;
  out << "k: " << t.size() << "\nroot: " << t.root() << "\ntree:\n";
  for (Label l = 1; l <= t.size(); ++l) {
    if (auto p = t.parent(l)) out << l << ' ' << *p << '\n';
  }
  return out.str();
}

std::string write_pattern(const HPattern& h) {
  std::ostringstream out;
  out << write_pattern(h.tree());
  out << "anchor: " << h.x_name() << ' ' << h.y_name() << "\ncross:\n";
  for (const CrossEdge& c : h.cross_edges()) {
    out << (c.end == AnchorEnd::kX ? h.x_name() : h.y_name()) << ' ' << c.label << '\n';
  }
  return out.str();
}

}  // namespace congest
