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

namespace congest {

using Element = std::uint64_t;
/// Sorted, duplicate-free.
using ElementSet = std::vector<Element>;

/// A family of distinct finite sets, kept sorted lexicographically.
struct SetFamily {
  std::size_t ground_size_hint = 0;
  std::vector<ElementSet> sets;

  /// Sorts each member, sorts the family and drops duplicates.
  static SetFamily of(std::vector<ElementSet> sets);
  std::vector<Element> ground() const;
  std::size_t max_member_size() const;
};

enum class Construction {
  kAuto,        // greedy on small inputs, search tree otherwise
  kGreedy,      // repeated deletion checked against every blocker
  kSearchTree,  // Monien-style branching on members of the last pick
};
const char* to_string(Construction c);

/// A compact (p,q)-representation F^ of F: F^ is a subfamily of F and for
/// every blocker C with |C| <= q, if some member of F avoids C then some
/// member of F^ avoids C.
struct Witness {
  std::vector<ElementSet> members;
  Construction construction = Construction::kAuto;
  /// |F^| <= binomial(p+q, p).
  bool within_binomial_bound = false;
  /// |F^| <= sum_{i=0..q} p^i.
  bool within_search_tree_bound = false;
};

std::uint64_t binomial(int n, int r);
std::uint64_t binomial_bound(int p, int q);
std::uint64_t search_tree_bound(int p, int q);
/// max of the two bounds above: what any construction here guarantees.
std::uint64_t witness_size_bound(int p, int q);

/// Inputs up to this ground size with q <= kGreedyMaxBlocker use the greedy
/// construction under Construction::kAuto.
inline constexpr std::size_t kGreedyMaxGround = 12;
inline constexpr int kGreedyMaxBlocker = 3;

/// Throws InvalidParams if p < 1, q < 0 or a member has more than p elements.
/// Greedy deletion visits members in lexicographic order; the result is a
/// minimal witness, which never exceeds binomial(p+q, p) members.
Witness compact_representation(const SetFamily& f, int p, int q,
                               Construction construction = Construction::kAuto);

/// Exhaustive check over every C within the ground set of f with |C| <= q.
/// Throws NotASubfamily if some member of fhat is not in f.
bool verify_witness(const SetFamily& f, const std::vector<ElementSet>& fhat, int q);

}  // namespace congest
