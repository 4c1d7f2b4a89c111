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

// congest: command-line front end for the simulator, the detection
// algorithms and the sequential oracle.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "congest/c4_detection.hpp"
#include "congest/error.hpp"
#include "congest/experiment.hpp"
#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/oracle.hpp"
#include "congest/pattern.hpp"
#include "congest/property_tester.hpp"
#include "congest/rep_family.hpp"
#include "congest/report.hpp"
#include "congest/tree_detection.hpp"

namespace {

using namespace congest;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct Globals {
  std::uint64_t seed = 0;
  int budget_mult = kDefaultBudgetMultiplier;
  int max_rounds = kDefaultMaxRounds;
  std::string report;
  std::string format = "text";
  bool per_node = false;
  bool timing = false;
};

void emit(const Globals& g, const std::string& text) {
  if (g.report.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.report, std::ios::binary);
  if (!out) throw InvalidParams("cannot write report to " + g.report);
  out << text;
}

RunOptions run_options(const Globals& g) {
  RunOptions options;
  options.seed = g.seed;
  options.budget_multiplier = g.budget_mult;
  options.max_rounds = g.max_rounds;
  return options;
}

std::vector<std::pair<std::string, std::string>> pattern_fields(const RootedPattern& t) {
  return {{"pattern_k", std::to_string(t.size())},
          {"pattern_root", std::to_string(t.root())},
          {"pattern_depth", std::to_string(t.height())}};
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

PatternGraph oracle_pattern(const PatternFile& p) {
  return p.has_anchor() ? to_pattern_graph(p.h_pattern()) : to_pattern_graph(p.rooted());
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file " + path);
  std::vector<ElementSet> sets;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    ElementSet set;
    std::string token;
    bool any = false;
    while (fields >> token) {
      if (token == "{}") {
        any = true;
        continue;
      }
      if (token.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad element '" + token + "'");
      set.push_back(std::stoull(token));
      any = true;
    }
    if (any) sets.push_back(std::move(set));
  }
  return SetFamily::of(std::move(sets));
}

std::string join_set(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CONGEST subgraph detection: simulator, algorithms and oracle"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML config file; command-line flags take precedence");

  Globals g;
  app.add_option("--seed", g.seed, "Root random seed");
  app.add_option("--budget-mult", g.budget_mult, "Bits per edge per round, in units of ceil(log2 n)")
      ->check(CLI::Range(2, 1 << 20));
  app.add_option("--max-rounds", g.max_rounds, "Round limit per run")->check(CLI::PositiveNumber);
  app.add_option("--report", g.report, "Write the report here instead of stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--per-node", g.per_node, "Include every node's output in reports");
  app.add_flag("--timing", g.timing, "Include wall-clock time (reports stop being reproducible)");

  // detect-tree
  auto* tree_cmd = app.add_subcommand("detect-tree", "Detect a tree pattern");
  std::string graph_path, pattern_path, mode = "det";
  std::optional<std::uint64_t> trials;
  tree_cmd->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  tree_cmd->add_option("--pattern", pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);
  tree_cmd->add_option("--mode", mode, "det: SOS tables; rand: color coding")->check(CLI::IsMember({"det", "rand"}));
  tree_cmd->add_option("--trials", trials, "Color-coding phases (default ceil(k^k ln 3))");

  // test-h
  auto* test_cmd = app.add_subcommand("test-h", "Test H-freeness for a tree-plus-edge pattern");
  double eps = 0.2;
  std::uint64_t max_trials = 1'000'000;
  bool all_trials = false;
  test_cmd->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  test_cmd->add_option("--pattern", pattern_path, "Pattern file with an anchor")->required()->check(CLI::ExistingFile);
  test_cmd->add_option("--eps", eps, "Distance parameter in (0,1)");
  test_cmd->add_option("--max-trials", max_trials, "Trial cap");
  test_cmd->add_flag("--all-trials", all_trials, "Keep running after the first rejecting trial");

  // detect-c4
  auto* c4_cmd = app.add_subcommand("detect-c4", "Detect a 4-cycle");
  c4_cmd->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Sequential ground truth");
  std::string query;
  oracle_cmd->add_option("query", query, "contains | mindel | packing")
      ->required()
      ->check(CLI::IsMember({"contains", "mindel", "packing"}));
  oracle_cmd->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--pattern", pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);

  // gen-graph
  auto* gen_cmd = app.add_subcommand("gen-graph", "Write a generated graph");
  std::string kind = "gnm", out_path;
  std::size_t n = 16, m = 24, a = 2, b = 3, copies = 1, component = 3;
  double density = 0.5;
  bool scramble = false;
  gen_cmd->add_option("--kind", kind, "Generator")
      ->check(CLI::IsMember({"gnm", "planted", "far", "component", "path", "cycle", "complete", "star",
                             "petersen", "bipartite", "empty"}));
  gen_cmd->add_option("--n", n, "Nodes (leaves for star)");
  gen_cmd->add_option("--m", m, "Edges for gnm and planted");
  gen_cmd->add_option("--a", a, "Left side for bipartite");
  gen_cmd->add_option("--b", b, "Right side for bipartite");
  gen_cmd->add_option("--copies", copies, "Copies for far");
  gen_cmd->add_option("--component", component, "Largest component for component");
  gen_cmd->add_option("--density", density, "Extra-edge density for component");
  gen_cmd->add_option("--pattern", pattern_path, "Pattern for planted and far")->check(CLI::ExistingFile);
  gen_cmd->add_flag("--scramble-ids", scramble, "Random distinct IDs below n^4");
  gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Sweep an algorithm over generated hosts");
  ExperimentConfig cfg;
  std::string algorithm = "det-tree", generator = "gnm", n_list = "16,32,64", seed_list = "0";
  std::string bench_graph, bench_pattern;
  bench_cmd->add_option("--algorithm", algorithm, "det-tree | rand-tree | test-h | c4")
      ->check(CLI::IsMember({"det-tree", "rand-tree", "test-h", "c4"}));
  bench_cmd->add_option("--generator", generator, "gnm | component | planted | far")
      ->check(CLI::IsMember({"gnm", "component", "planted", "far"}));
  bench_cmd->add_option("--n", n_list, "Node counts, e.g. 16,32,64 or 16..20");
  bench_cmd->add_option("--seeds", seed_list, "Seeds, e.g. 0..9 or 1,4,7");
  bench_cmd->add_option("--degree", cfg.degree, "Average degree for gnm and planted");
  bench_cmd->add_option("--component", cfg.component, "Block size for component (0: pattern size - 1)");
  bench_cmd->add_option("--density", cfg.density, "Extra-edge density for component");
  bench_cmd->add_option("--graph", bench_graph, "Fixed graph file instead of a generator");
  bench_cmd->add_option("--pattern", bench_pattern, "Pattern file");
  bench_cmd->add_option("--eps", cfg.eps, "Distance parameter for test-h");
  bench_cmd->add_flag("--scramble-ids", cfg.scramble_ids, "Random distinct IDs below n^4");

  // rep-family
  auto* rep_cmd = app.add_subcommand("rep-family", "Compute and check a compact representation");
  std::string family_path, construction = "auto";
  int p = 1, q = 0;
  rep_cmd->add_option("--family", family_path, "One set per line, elements separated by spaces")
      ->required()
      ->check(CLI::ExistingFile);
  rep_cmd->add_option("--p", p, "Largest member size");
  rep_cmd->add_option("--q", q, "Largest blocker size");
  rep_cmd->add_option("--construction", construction, "auto | greedy | search-tree")
      ->check(CLI::IsMember({"auto", "greedy", "search-tree"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const ReportFormat format = parse_report_format(g.format);
    ReportExtras extras;
    extras.per_node = g.per_node;

    if (*tree_cmd) {
      const Graph graph = load_graph_file(graph_path);
      const RootedPattern t = load_pattern_file(pattern_path).rooted();
      RunReport report;
      extras.fields = pattern_fields(t);
      const double ms = timed([&] {
        if (mode == "det") {
          report = deterministic_tree_detection(graph, t, run_options(g));
        } else {
          RandomizedOptions options;
          options.phases = trials;
          const auto result = randomized_tree_detection(graph, t, g.seed, run_options(g), options);
          report = result.report;
          extras.fields.emplace_back("phases_planned", std::to_string(result.phases_planned));
          extras.fields.emplace_back("phases_run", std::to_string(result.phases_run));
        }
      });
      if (g.timing) extras.wall_ms = ms;
      emit(g, render_report(report, extras, format));
    } else if (*test_cmd) {
      const Graph graph = load_graph_file(graph_path);
      const HPattern h = load_pattern_file(pattern_path).h_pattern();
      TesterOptions options;
      options.max_trials = max_trials;
      options.stop_at_first_reject = !all_trials;
      TesterResult result;
      const double ms = timed([&] { result = test_h_freeness(graph, h, eps, g.seed, run_options(g), options); });
      extras.fields = {{"eps", format_double(eps)},
                       {"h_edges", std::to_string(h.edge_count())},
                       {"trials_planned", std::to_string(result.trials_planned)},
                       {"trials_run", std::to_string(result.trials.size())}};
      extras.trials = result.trials;
      if (g.timing) extras.wall_ms = ms;
      emit(g, render_report(result.report, extras, format));
    } else if (*c4_cmd) {
      const Graph graph = load_graph_file(graph_path);
      RunReport report;
      const double ms = timed([&] { report = detect_c4(graph, run_options(g)); });
      extras.fields = {{"s_threshold", std::to_string(c4_threshold(graph.node_count()))}};
      if (g.timing) extras.wall_ms = ms;
      emit(g, render_report(report, extras, format));
    } else if (*oracle_cmd) {
      const Graph graph = load_graph_file(graph_path);
      const PatternGraph h = oracle_pattern(load_pattern_file(pattern_path));
      std::vector<std::pair<std::string, std::string>> fields{{"query", query},
                                                              {"n", std::to_string(graph.node_count())},
                                                              {"m", std::to_string(graph.edge_count())}};
      if (query == "contains") {
        fields.emplace_back("contains", contains_subgraph(graph, h) ? "true" : "false");
      } else if (query == "mindel") {
        const MinDeletion result = min_deletion(graph, h);
        fields.emplace_back("min_edges_to_h_free", std::to_string(result.size));
        fields.emplace_back("method", result.method == MinDeletionMethod::kEnumeration ? "enumeration" : "hitting-set");
        std::string removed;
        for (std::size_t e : result.removed) {
          const Edge edge = graph.edges()[e];
          removed += (removed.empty() ? "" : " ") + std::to_string(graph.id(edge.u)) + "-" + std::to_string(graph.id(edge.v));
        }
        fields.emplace_back("removed", removed);
      } else {
        const Packing packing = count_edge_disjoint_copies(graph, h);
        fields.emplace_back("edge_disjoint_copies", std::to_string(packing.count));
        fields.emplace_back("exact", packing.exact ? "true" : "false");
      }
      emit(g, render_fields(fields, format));
    } else if (*gen_cmd) {
      Graph graph;
      auto need_pattern = [&] {
        if (pattern_path.empty()) throw InvalidParams("--kind " + kind + " needs --pattern");
        return load_pattern_file(pattern_path);
      };
      if (kind == "gnm") graph = random_gnm(n, m, g.seed);
      else if (kind == "planted") graph = gen_planted(n, m, oracle_pattern(need_pattern()), g.seed);
      else if (kind == "far") graph = gen_far_instance(need_pattern().h_pattern(), copies);
      else if (kind == "component") graph = gen_component_bounded(n, component, density, g.seed);
      else if (kind == "path") graph = path_graph(n);
      else if (kind == "cycle") graph = cycle_graph(n);
      else if (kind == "complete") graph = complete_graph(n);
      else if (kind == "star") graph = star_graph(n);
      else if (kind == "petersen") graph = petersen_graph();
      else if (kind == "bipartite") graph = complete_bipartite(a, b);
      else graph = empty_graph(n);
      if (scramble) graph = scramble_ids(graph, g.seed);
      const std::string text = write_graph(graph);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InvalidParams("cannot write " + out_path);
        out << text;
      }
    } else if (*bench_cmd) {
      cfg.algorithm = parse_algorithm(algorithm);
      cfg.generator = parse_generator(generator);
      cfg.n_values.clear();
      for (auto v : parse_u64_list(n_list)) cfg.n_values.push_back(static_cast<std::size_t>(v));
      cfg.seeds = parse_u64_list(seed_list);
      if (!bench_graph.empty()) cfg.graph_file = bench_graph;
      if (!bench_pattern.empty()) cfg.pattern_file = bench_pattern;
      cfg.budget_multiplier = g.budget_mult;
      cfg.max_rounds = g.max_rounds;
      cfg.timing = g.timing;
      emit(g, render_sweep(run_experiment(cfg), format));
    } else if (*rep_cmd) {
      const SetFamily family = load_family(family_path);
      const Construction c = construction == "greedy"        ? Construction::kGreedy
                             : construction == "search-tree" ? Construction::kSearchTree
                                                             : Construction::kAuto;
      const Witness w = compact_representation(family, p, q, c);
      std::vector<std::pair<std::string, std::string>> fields{
          {"p", std::to_string(p)},
          {"q", std::to_string(q)},
          {"family_size", std::to_string(family.sets.size())},
          {"ground_size", std::to_string(family.ground().size())},
          {"construction", to_string(w.construction)},
          {"witness_size", std::to_string(w.members.size())},
          {"binomial_bound", std::to_string(binomial_bound(p, q))},
          {"search_tree_bound", std::to_string(search_tree_bound(p, q))},
          {"within_binomial_bound", w.within_binomial_bound ? "true" : "false"},
          {"within_search_tree_bound", w.within_search_tree_bound ? "true" : "false"},
          {"verified", verify_witness(family, w.members, q) ? "true" : "false"}};
      std::string members;
      for (const auto& s : w.members) members += (members.empty() ? "" : " ") + join_set(s);
      fields.emplace_back("members", members);
      emit(g, render_fields(fields, format));
    }
  } catch (const std::exception& e) {
    std::cerr << "congest: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
