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

#include "congest/rep_family.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "congest/error.hpp"

namespace congest {

SetFamily SetFamily::of(std::vector<ElementSet> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  SetFamily f;
  f.sets = std::move(sets);
  f.ground_size_hint = f.ground().size();
  return f;
}

std::vector<Element> SetFamily::ground() const {
  std::set<Element> all;
  for (const auto& s : sets) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

std::size_t SetFamily::max_member_size() const {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return best;
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::kAuto: return "auto";
    case Construction::kGreedy: return "greedy";
    case Construction::kSearchTree: return "search-tree";
  }
  return "?";
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t binomial_bound(int p, int q) { return binomial(p + q, p); }

std::uint64_t search_tree_bound(int p, int q) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= q; ++i) {
    total += power;
    power *= static_cast<std::uint64_t>(p);
  }
  return total;
}

std::uint64_t witness_size_bound(int p, int q) {
  return std::max(binomial_bound(p, q), search_tree_bound(p, q));
}

namespace {

/// Members rewritten over dense element indices 0..g-1.
struct IndexedFamily {
  std::vector<Element> ground;
  std::vector<std::vector<std::uint32_t>> members;
};

IndexedFamily index_family(const SetFamily& f) {
  IndexedFamily out;
  out.ground = f.ground();
  for (const auto& s : f.sets) {
    std::vector<std::uint32_t> idx;
    for (Element e : s) {
      idx.push_back(static_cast<std::uint32_t>(
          std::lower_bound(out.ground.begin(), out.ground.end(), e) - out.ground.begin()));
    }
    out.members.push_back(std::move(idx));
  }
  return out;
}

/// Calls fn(mask) for every subset of {0..g-1} with at most q elements.
template <typename Fn>
void for_each_blocker_mask(std::size_t g, int q, Fn&& fn) {
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t next, std::uint64_t mask) -> void {
    fn(mask);
    if (static_cast<int>(chosen.size()) == q) return;
    for (std::uint32_t e = next; e < g; ++e) {
      chosen.push_back(e);
      self(self, e + 1, mask | (std::uint64_t{1} << e));
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::size_t> greedy_keep(const IndexedFamily& f, int q) {
  const std::size_t g = f.ground.size();
  if (g > 64) throw TooLarge("greedy construction supports at most 64 ground elements");
  std::vector<std::uint64_t> masks;
  for (const auto& m : f.members) {
    std::uint64_t mask = 0;
    for (auto e : m) mask |= std::uint64_t{1} << e;
    masks.push_back(mask);
  }
  std::vector<std::uint64_t> blockers;
  for_each_blocker_mask(g, q, [&](std::uint64_t c) { blockers.push_back(c); });

  // avoiding[c] = number of kept members disjoint from blocker c.
  std::vector<std::uint32_t> avoiding(blockers.size(), 0);
  for (std::size_t c = 0; c < blockers.size(); ++c)
    for (std::uint64_t m : masks)
      if ((m & blockers[c]) == 0) ++avoiding[c];

  std::vector<bool> kept(masks.size(), true);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool removable = true;
    for (std::size_t c = 0; c < blockers.size() && removable; ++c) {
      if ((masks[i] & blockers[c]) == 0 && avoiding[c] < 2) removable = false;
    }
    if (!removable) continue;
    kept[i] = false;
    for (std::size_t c = 0; c < blockers.size(); ++c)
      if ((masks[i] & blockers[c]) == 0) --avoiding[c];
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (kept[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> search_tree_keep(const IndexedFamily& f, int q) {
  std::vector<bool> blocked(f.ground.size(), false);
  std::set<std::size_t> picked;
  auto rec = [&](auto&& self, int depth) -> void {
    std::size_t found = f.members.size();
    for (std::size_t i = 0; i < f.members.size(); ++i) {
      const auto& m = f.members[i];
      if (std::none_of(m.begin(), m.end(), [&](std::uint32_t e) { return blocked[e]; })) {
        found = i;
        break;
      }
    }
    if (found == f.members.size()) return;
    picked.insert(found);
    if (depth == q) return;
    for (std::uint32_t e : f.members[found]) {
      blocked[e] = true;
      self(self, depth + 1);
      blocked[e] = false;
    }
  };
  rec(rec, 0);
  return {picked.begin(), picked.end()};
}

}  // namespace

Witness compact_representation(const SetFamily& f, int p, int q, Construction construction) {
  if (p < 1) throw InvalidParams("p must be at least 1");
  if (q < 0) throw InvalidParams("q must be non-negative");
  if (f.max_member_size() > static_cast<std::size_t>(p)) {
    throw InvalidParams("family has a member with more than p elements");
  }

  const IndexedFamily indexed = index_family(f);
  if (construction == Construction::kAuto) {
    construction = indexed.ground.size() <= kGreedyMaxGround && q <= kGreedyMaxBlocker
                       ? Construction::kGreedy
                       : Construction::kSearchTree;
  }
  const auto keep = construction == Construction::kGreedy ? greedy_keep(indexed, q)
                                                          : search_tree_keep(indexed, q);
  Witness w;
  w.construction = construction;
  for (std::size_t i : keep) w.members.push_back(f.sets[i]);
  w.within_binomial_bound = w.members.size() <= binomial_bound(p, q);
  w.within_search_tree_bound = w.members.size() <= search_tree_bound(p, q);
  return w;
}

bool verify_witness(const SetFamily& f, const std::vector<ElementSet>& fhat, int q) {
  for (const auto& member : fhat) {
    if (!std::binary_search(f.sets.begin(), f.sets.end(), member)) {
      throw NotASubfamily("witness member is not in the family");
    }
  }
  const std::vector<Element> ground = f.ground();
  std::vector<Element> blocker;

  auto avoids = [&](const ElementSet& s) {
    for (Element e : s)
      if (std::find(blocker.begin(), blocker.end(), e) != blocker.end()) return false;
    return true;
  };
  auto holds = [&] {
    const bool in_f = std::any_of(f.sets.begin(), f.sets.end(), avoids);
    return !in_f || std::any_of(fhat.begin(), fhat.end(), avoids);
  };
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (!holds()) return false;
    if (static_cast<int>(blocker.size()) == q) return true;
    for (std::size_t i = next; i < ground.size(); ++i) {
      blocker.push_back(ground[i]);
      const bool ok = self(self, i + 1);
      blocker.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace congest
