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

#include "congest/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>

#include "congest/c4_detection.hpp"
#include "congest/generators.hpp"
#include "congest/property_tester.hpp"
#include "congest/tree_detection.hpp"

namespace congest {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "det-tree") return Algorithm::kDetTree;
  if (name == "rand-tree") return Algorithm::kRandTree;
  if (name == "test-h") return Algorithm::kTester;
  if (name == "c4") return Algorithm::kC4;
  throw InvalidParams("unknown algorithm '" + std::string(name) + "'");
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kDetTree: return "det-tree";
    case Algorithm::kRandTree: return "rand-tree";
    case Algorithm::kTester: return "test-h";
    case Algorithm::kC4: return "c4";
  }
  return "?";
}

GeneratorKind parse_generator(std::string_view name) {
  if (name == "gnm") return GeneratorKind::kGnm;
  if (name == "component") return GeneratorKind::kComponent;
  if (name == "planted") return GeneratorKind::kPlanted;
  if (name == "far") return GeneratorKind::kFar;
  throw InvalidParams("unknown generator '" + std::string(name) + "'");
}

const char* to_string(GeneratorKind g) {
  switch (g) {
    case GeneratorKind::kGnm: return "gnm";
    case GeneratorKind::kComponent: return "component";
    case GeneratorKind::kPlanted: return "planted";
    case GeneratorKind::kFar: return "far";
  }
  return "?";
}

namespace {

bool needs_pattern(const ExperimentConfig& cfg) {
  if (cfg.algorithm != Algorithm::kC4) return true;
  if (cfg.graph_file) return false;
  return cfg.generator == GeneratorKind::kPlanted || cfg.generator == GeneratorKind::kFar ||
         (cfg.generator == GeneratorKind::kComponent && cfg.component == 0);
}

PatternFile pattern_of(const ExperimentConfig& cfg) { return load_pattern_file(*cfg.pattern_file); }

}  // namespace

void ExperimentConfig::validate() const {
  if (algorithm == Algorithm::kTester && !(eps > 0.0 && eps < 1.0)) {
    throw InvalidParams("eps must lie strictly between 0 and 1");
  }
  if (budget_multiplier < 2) throw InvalidParams("budget multiplier must be at least 2");
  if (max_rounds < 1) throw InvalidParams("max rounds must be at least 1");
  if (seeds.empty()) throw InvalidParams("no seeds given");
  if (graph_file) {
    if (!std::filesystem::exists(*graph_file)) throw InvalidParams("graph file not found: " + *graph_file);
  } else if (n_values.empty()) {
    throw InvalidParams("no n values given");
  }
  if (needs_pattern(*this)) {
    if (!pattern_file) throw InvalidParams("this experiment needs a pattern file");
    if (!std::filesystem::exists(*pattern_file)) throw InvalidParams("pattern file not found: " + *pattern_file);
    if ((algorithm == Algorithm::kTester || generator == GeneratorKind::kFar) && !pattern_of(*this).has_anchor()) {
      throw InvalidParams("this experiment needs a pattern with an anchor");
    }
  }
}

Graph sweep_graph(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed) {
  Graph g;
  if (cfg.graph_file) {
    g = load_graph_file(*cfg.graph_file);
  } else {
    switch (cfg.generator) {
      case GeneratorKind::kGnm: {
        const auto pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        const auto m = std::min<std::size_t>(pairs, static_cast<std::size_t>(std::llround(cfg.degree * n / 2.0)));
        g = random_gnm(n, m, seed);
        break;
      }
      case GeneratorKind::kComponent: {
        const std::size_t block =
            cfg.component ? cfg.component : static_cast<std::size_t>(std::max(1, pattern_of(cfg).k - 1));
        g = gen_component_bounded(n, block, cfg.density, seed);
        break;
      }
      case GeneratorKind::kPlanted: {
        const PatternFile p = pattern_of(cfg);
        const PatternGraph pg = p.has_anchor() ? to_pattern_graph(p.h_pattern()) : to_pattern_graph(p.rooted());
        const auto pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        auto m = static_cast<std::size_t>(std::llround(cfg.degree * n / 2.0));
        m = std::min(pairs, std::max(m, pg.edge_count()));
        g = gen_planted(n, m, pg, seed);
        break;
      }
      case GeneratorKind::kFar: {
        const HPattern h = pattern_of(cfg).h_pattern();
        g = gen_far_instance(h, std::max<std::size_t>(1, n / h.node_count()));
        break;
      }
    }
  }
  if (cfg.scramble_ids) g = scramble_ids(g, seed);
  return g;
}

SweepReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::optional<PatternFile> pattern;
  if (cfg.pattern_file && cfg.algorithm != Algorithm::kC4) pattern = pattern_of(cfg);

  std::vector<std::size_t> n_values = cfg.n_values;
  if (cfg.graph_file) n_values = {0};
  std::vector<std::uint64_t> seeds = cfg.seeds;
  std::sort(n_values.begin(), n_values.end());
  std::sort(seeds.begin(), seeds.end());

  RunOptions options;
  options.budget_multiplier = cfg.budget_multiplier;
  options.max_rounds = cfg.max_rounds;

  SweepReport sweep;
  for (std::size_t n : n_values) {
    for (std::uint64_t seed : seeds) {
      try {
        const Graph g = sweep_graph(cfg, n, seed);
        options.seed = seed;
        const auto start = std::chrono::steady_clock::now();
        RunReport report;
        switch (cfg.algorithm) {
          case Algorithm::kDetTree:
            report = deterministic_tree_detection(g, pattern->rooted(), options);
            break;
          case Algorithm::kRandTree:
            report = randomized_tree_detection(g, pattern->rooted(), seed, options).report;
            break;
          case Algorithm::kTester:
            report = test_h_freeness(g, pattern->h_pattern(), cfg.eps, seed, options).report;
            break;
          case Algorithm::kC4:
            report = detect_c4(g, options);
            break;
        }
        SweepRow row = SweepRow::from(report);
        row.seed = seed;
        if (cfg.timing) {
          const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
          row.wall_ms = elapsed.count();
        }
        sweep.rows.push_back(row);
      } catch (const Error& e) {
        throw SweepCellError(n, seed, e.what());
      }
    }
  }
  return sweep;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  auto number = [](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InvalidParams("not a non-negative integer: '" + std::string(s) + "'");
    }
    return std::stoull(std::string(s));
  };
  std::vector<std::uint64_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (hi < lo) throw InvalidParams("empty range");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto comma = text.find(',', begin);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(number(text.substr(begin, end - begin)));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return out;
}

}  // namespace congest
