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
#include <string>
#include <string_view>
#include <vector>

#include "congest/error.hpp"
#include "congest/graph.hpp"
#include "congest/pattern.hpp"
#include "congest/report.hpp"

namespace congest {

enum class Algorithm { kDetTree, kRandTree, kTester, kC4 };
Algorithm parse_algorithm(std::string_view name);
const char* to_string(Algorithm a);

/// How sweep hosts are produced for each (n, seed) cell.
enum class GeneratorKind {
  kGnm,        // random_gnm with m = round(n * degree / 2)
  kComponent,  // gen_component_bounded with `component` nodes per block
  kPlanted,    // random_gnm host plus one planted copy of the pattern
  kFar,        // gen_far_instance with floor(n / |V(H)|) copies
};
GeneratorKind parse_generator(std::string_view name);
const char* to_string(GeneratorKind g);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kDetTree;
  /// A fixed graph; when set, `n_values` and the generator are ignored.
  std::optional<std::string> graph_file;
  GeneratorKind generator = GeneratorKind::kGnm;
  std::vector<std::size_t> n_values{16, 32, 64};
  double degree = 3.0;
  /// Block size for kComponent; 0 means pattern size - 1.
  std::size_t component = 0;
  double density = 0.5;
  std::optional<std::string> pattern_file;
  std::vector<std::uint64_t> seeds{0};
  double eps = 0.2;
  int budget_multiplier = kDefaultBudgetMultiplier;
  int max_rounds = kDefaultMaxRounds;
  bool scramble_ids = false;
  bool timing = false;

  /// Throws InvalidParams on a config that cannot run: a missing pattern, a
  /// missing file, or eps outside (0,1) for the tester.
  void validate() const;
};

/// A module error raised inside one sweep cell.
class SweepCellError : public Error {
 public:
  SweepCellError(std::size_t n, std::uint64_t seed, const std::string& what)
      : Error("sweep cell n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + what),
        n_(n),
        seed_(seed) {}
  std::size_t n() const { return n_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::size_t n_;
  std::uint64_t seed_;
};

/// The host graph of one sweep cell.
Graph sweep_graph(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed);

/// Runs every (n, seed) cell; rows come back sorted by (n, seed).
SweepReport run_experiment(const ExperimentConfig& cfg);

/// Parses "0..9" (inclusive) or "1,5,7" into a list.
std::vector<std::uint64_t> parse_u64_list(std::string_view text);

}  // namespace congest
