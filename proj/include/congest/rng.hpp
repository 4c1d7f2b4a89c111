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

#include <cstdint>
#include <limits>

namespace congest {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used both as the seed
/// mixing function and as the output function of the per-node stream.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the random stream owned by one node in one trial:
/// mix64(mix64(mix64(root) ^ node) ^ trial).
constexpr std::uint64_t stream_seed(std::uint64_t root_seed, std::uint64_t node_id,
                                    std::uint64_t trial_index) {
  return mix64(mix64(mix64(root_seed) ^ node_id) ^ trial_index);
}

/// SplitMix64 generator. Satisfies UniformRandomBitGenerator, but callers
/// should draw integers through `uniform_below` so results do not depend on
/// the standard library's distribution implementations.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection: draws x until
  /// x < 2^64 - (2^64 mod bound), returns x mod bound. bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = max() - (max() % bound + 1) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x <= limit) return x % bound;
    }
  }

  bool coin() { return uniform_below(2) == 1; }

 private:
  std::uint64_t state_;
};

}  // namespace congest
