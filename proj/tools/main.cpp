#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spantree/ga.hpp"
#include "spantree/io.hpp"
#include "spantree/metrics.hpp"
#include "spantree/peeling.hpp"
#include "spantree/report.hpp"
#include "spantree/spanning.hpp"
#include "spantree/variants.hpp"

namespace {

using namespace spantree;

std::string fmt_value(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

struct SolveOptions {
  std::string in;
  std::string out;
  std::string dot;
  std::string objective;
  std::string sense = "min";
  std::string variant;
  std::uint64_t cap = 1000000;
  GaConfig cfg;
};

void add_ga_flags(CLI::App* cmd, SolveOptions& opt) {
  cmd->add_option("--model", opt.cfg.model, "GA model: 1 direct, 2 Kruskal decoded")
      ->check(CLI::Range(1, 2));
  cmd->add_option("--seed", opt.cfg.seed, "Random seed");
  cmd->add_option("--pop", opt.cfg.population_size, "Population size");
  cmd->add_option("--gens", opt.cfg.max_generations, "Maximum generations");
  cmd->add_option("--stall", opt.cfg.stall_generations, "Stop after this many generations without improvement");
  cmd->add_option("--tournament", opt.cfg.tournament_size, "Tournament size");
  cmd->add_option("--crossover", opt.cfg.crossover_rate, "Crossover rate");
  cmd->add_option("--mutation", opt.cfg.mutation_rate, "Per-gene mutation rate (default 1/length)");
  cmd->add_option("--elitism", opt.cfg.elitism_count, "Elite individuals kept per generation");
  cmd->add_option("--alpha", opt.cfg.alpha, "Model 2 chromosome length factor");
  cmd->add_option("--threads", opt.cfg.threads, "Fitness evaluation workers (never changes results)");
  cmd->set_config("--config", "", "Read key=value defaults from a file");
}

void add_objective_flags(CLI::App* cmd, SolveOptions& opt, bool required) {
  auto* objective = cmd->add_option("--objective", opt.objective,
                                    "Objective: cvec:4,2,2,2 | spow:2 | wiener | subtrees");
  auto* sense = cmd->add_option("--sense", opt.sense, "min or max")
                    ->check(CLI::IsMember({"min", "max"}));
  if (required) {
    objective->required();
    sense->required();
  }
}

void print_solution(const Graph& g, const SolveResult& result) {
  if (!result.feasible) {
    std::cout << "no feasible solution found\n";
    return;
  }
  std::cout << "value " << fmt_value(result.best_value) << "\n";
  std::cout << "labels";
  for (int label : result.best_selection) std::cout << ' ' << label;
  std::cout << "\nedges";
  for (int label : result.best_selection) {
    const Edge& e = g.edge(label);
    std::cout << " (" << g.vertex_name(e.u) << "," << g.vertex_name(e.v) << ")";
  }
  std::cout << "\n";
}

void emit_solution(const Graph& g, const std::string& command, const ObjectiveSpec& spec,
                   const SolveResult& result, std::optional<int> model,
                   std::optional<std::uint64_t> seed, const SolveOptions& opt,
                   const VariantSpec* variant = nullptr) {
  print_solution(g, result);
  if (!opt.out.empty())
    write_file(opt.out, solve_report_json(g, command, spec, result, model, seed, variant));
  if (!opt.dot.empty() && result.feasible)
    write_file(opt.dot, to_dot(g, result.best_selection, true));
}

int run_solve(const SolveOptions& opt) {
  Graph g = load_graph_file(opt.in);
  ObjectiveSpec spec = ObjectiveSpec::parse(opt.objective, parse_sense(opt.sense));
  SolveResult result = solve(g, spec, opt.cfg);
  emit_solution(g, "solve", spec, result, opt.cfg.model, opt.cfg.seed, opt);
  return result.feasible ? 0 : 1;
}

int run_exact(const SolveOptions& opt) {
  Graph g = load_graph_file(opt.in);
  ObjectiveSpec spec = ObjectiveSpec::parse(opt.objective, parse_sense(opt.sense));
  SolveResult result = solve_exact(g, spec, opt.cap);
  emit_solution(g, "exact", spec, result, std::nullopt, std::nullopt, opt);
  return 0;
}

int run_variant(const SolveOptions& opt) {
  Graph g = load_graph_file(opt.in);
  ObjectiveSpec base = ObjectiveSpec::parse(opt.objective, parse_sense(opt.sense));
  VariantSpec variant = VariantSpec::parse(g, opt.variant, base);
  SolveResult result = solve_variant(g, variant, opt.cfg);
  emit_solution(g, "variant", base, result, opt.cfg.model, opt.cfg.seed, opt, &variant);
  return result.feasible ? 0 : 1;
}

int run_peel(const SolveOptions& opt, bool node_mode) {
  Graph g = load_graph_file(opt.in);
  ObjectiveSpec spec = ObjectiveSpec::parse(opt.objective, parse_sense(opt.sense));
  PeelingReport report =
      node_mode ? peel_nodes(g, spec, opt.cfg) : peel_edges(g, spec, opt.cfg);
  std::cout << peel_report_table(g, report, node_mode);
  const std::string command = node_mode ? "peel-nodes" : "peel-edges";
  if (!opt.out.empty())
    write_file(opt.out, peel_report_json(g, command, spec, opt.cfg.seed, report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense and sparse spanning trees by degree-based objectives and a genetic algorithm"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "GA search for an optimal spanning tree");
  solve_cmd->add_option("--in", solve_opt.in, "Input graph file")->required();
  solve_cmd->add_option("--out", solve_opt.out, "Write a JSON report");
  solve_cmd->add_option("--dot", solve_opt.dot, "Write a DOT file with the tree highlighted");
  add_objective_flags(solve_cmd, solve_opt, true);
  add_ga_flags(solve_cmd, solve_opt);

  SolveOptions exact_opt;
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum over all spanning trees");
  exact_cmd->add_option("--in", exact_opt.in, "Input graph file")->required();
  exact_cmd->add_option("--out", exact_opt.out, "Write a JSON report");
  exact_cmd->add_option("--dot", exact_opt.dot, "Write a DOT file with the tree highlighted");
  exact_cmd->add_option("--cap", exact_opt.cap, "Refuse graphs with more spanning trees than this");
  add_objective_flags(exact_cmd, exact_opt, true);

  SolveOptions variant_opt;
  auto* variant_cmd = app.add_subcommand("variant", "Constrained subtree problems");
  variant_cmd->add_option("--in", variant_opt.in, "Input graph file")->required();
  variant_cmd->add_option("--out", variant_opt.out, "Write a JSON report");
  variant_cmd->add_option("--dot", variant_opt.dot, "Write a DOT file with the tree highlighted");
  variant_cmd
      ->add_option("--variant", variant_opt.variant,
                   "k-subtree:6 | steiner:a,b,c | conflicts:13-16,2-5 | degree-bound:3")
      ->required();
  add_objective_flags(variant_cmd, variant_opt, true);
  add_ga_flags(variant_cmd, variant_opt);

  SolveOptions peel_nodes_opt;
  peel_nodes_opt.objective = "cvec:4,2,2,2";
  peel_nodes_opt.sense = "max";
  auto* peel_nodes_cmd =
      app.add_subcommand("peel-nodes", "Recursive key-node analysis (remove the path between the two highest-degree tree vertices)");
  peel_nodes_cmd->add_option("--in", peel_nodes_opt.in, "Input graph file")->required();
  peel_nodes_cmd->add_option("--out", peel_nodes_opt.out, "Write a JSON report");
  add_objective_flags(peel_nodes_cmd, peel_nodes_opt, false);
  add_ga_flags(peel_nodes_cmd, peel_nodes_opt);

  SolveOptions peel_edges_opt;
  peel_edges_opt.objective = "cvec:4,2,2,2";
  peel_edges_opt.sense = "max";
  auto* peel_edges_cmd =
      app.add_subcommand("peel-edges", "Recursive key-edge analysis (remove tree edges of maximum degree sum)");
  peel_edges_cmd->add_option("--in", peel_edges_opt.in, "Input graph file")->required();
  peel_edges_cmd->add_option("--out", peel_edges_opt.out, "Write a JSON report");
  add_objective_flags(peel_edges_cmd, peel_edges_opt, false);
  add_ga_flags(peel_edges_cmd, peel_edges_opt);

  std::string degrees_text;
  std::string greedy_dot;
  std::string greedy_out;
  auto* greedy_cmd = app.add_subcommand("greedy-tree", "Build the greedy tree of a degree sequence");
  greedy_cmd->add_option("--degrees", degrees_text, "Comma-separated degree sequence, e.g. 3,1,1,1")
      ->required();
  greedy_cmd->add_option("--dot", greedy_dot, "Write the tree as DOT");
  greedy_cmd->add_option("--out", greedy_out, "Write a JSON report");

  SolveOptions metrics_opt;
  auto* metrics_cmd = app.add_subcommand("metrics", "Evaluate an objective on a tree input");
  metrics_cmd->add_option("--in", metrics_opt.in, "Input tree file (edge list)")->required();
  metrics_cmd->add_option("--out", metrics_opt.out, "Write a JSON report");
  add_objective_flags(metrics_cmd, metrics_opt, false);
  metrics_cmd->get_option("--objective")->required();

  struct {
    int n = 10;
    int m = 19;
    std::uint64_t seed = 1;
    bool connected = false;
    bool star = false;
    bool path = false;
    std::string out;
  } gen_opt;
  auto* gen_cmd = app.add_subcommand("gen-random", "Generate a random test graph");
  gen_cmd->add_option("--n", gen_opt.n, "Vertices")->required();
  gen_cmd->add_option("--m", gen_opt.m, "Edges")->required();
  gen_cmd->add_option("--seed", gen_opt.seed, "Random seed");
  gen_cmd->add_flag("--connected", gen_opt.connected, "Guarantee connectivity");
  gen_cmd->add_flag("--planted-star", gen_opt.star, "Make some vertex adjacent to all others");
  gen_cmd->add_flag("--planted-path", gen_opt.path, "Include a Hamiltonian path");
  gen_cmd->add_option("--out", gen_opt.out, "Edge-list output file")->required();

  std::string count_in;
  auto* count_cmd = app.add_subcommand("count", "Exact spanning tree count (matrix-tree theorem)");
  count_cmd->add_option("--in", count_in, "Input graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*solve_cmd) return run_solve(solve_opt);
    if (*exact_cmd) return run_exact(exact_opt);
    if (*variant_cmd) return run_variant(variant_opt);
    if (*peel_nodes_cmd) return run_peel(peel_nodes_opt, true);
    if (*peel_edges_cmd) return run_peel(peel_edges_opt, false);

    if (*greedy_cmd) {
      DegreeSequence seq;
      std::string item;
      std::istringstream in(degrees_text);
      while (std::getline(in, item, ',')) seq.push_back(std::stoi(item));
      std::sort(seq.begin(), seq.end(), std::greater<int>());
      TreeView tree = greedy_tree(seq);
      std::cout << "degrees";
      for (int d : seq) std::cout << ' ' << d;
      std::cout << "\nedges";
      for (const auto& [u, v] : tree.edge_ends) std::cout << " (" << u + 1 << "," << v + 1 << ")";
      std::cout << "\n";
      if (!greedy_dot.empty()) write_file(greedy_dot, tree_to_dot(tree));
      if (!greedy_out.empty()) {
        std::ostringstream json;
        json << "{\n  \"schema_version\": 1,\n  \"command\": \"greedy-tree\",\n  \"degrees\": [";
        for (std::size_t i = 0; i < seq.size(); ++i) json << (i ? ", " : "") << seq[i];
        json << "],\n  \"edges\": [";
        for (std::size_t i = 0; i < tree.edge_ends.size(); ++i)
          json << (i ? ", " : "") << "[" << tree.edge_ends[i][0] + 1 << ", "
               << tree.edge_ends[i][1] + 1 << "]";
        json << "]\n}\n";
        write_file(greedy_out, json.str());
      }
      return 0;
    }

    if (*metrics_cmd) {
      Graph g = load_graph_file(metrics_opt.in);
      if (g.edge_count() != g.vertex_count() - 1)
        throw std::invalid_argument("metrics expects a tree input (|E| = N-1)");
      ObjectiveSpec spec =
          ObjectiveSpec::parse(metrics_opt.objective, parse_sense(metrics_opt.sense));
      EdgeSelection all(static_cast<std::size_t>(g.edge_count()));
      std::iota(all.begin(), all.end(), 1);
      DecodeResult decoded =
          decode_tree(g, all, std::max(1, g.vertex_count() - 1), true);
      double value = evaluate(*decoded.tree, spec);
      std::cout << fmt_value(value) << "\n";
      if (!metrics_opt.out.empty()) {
        SolveResult as_result;
        as_result.feasible = true;
        as_result.best_value = value;
        as_result.best_selection = all;
        write_file(metrics_opt.out, solve_report_json(g, "metrics", spec, as_result,
                                                      std::nullopt, std::nullopt));
      }
      return 0;
    }

    if (*gen_cmd) {
      Rng rng(gen_opt.seed);
      GeneratedGraph generated = gen_random_graph(gen_opt.n, gen_opt.m, rng, gen_opt.connected,
                                                  gen_opt.star, gen_opt.path);
      std::ofstream out(gen_opt.out);
      if (!out) throw std::runtime_error("cannot write '" + gen_opt.out + "'");
      write_edge_list(out, generated.graph);
      std::cout << "wrote " << gen_opt.out << " (n=" << gen_opt.n << " m=" << gen_opt.m << ")\n";
      if (generated.hub)
        std::cout << "hub " << generated.graph.vertex_name(*generated.hub) << "\n";
      if (generated.path) {
        std::cout << "path";
        for (int v : *generated.path) std::cout << ' ' << generated.graph.vertex_name(v);
        std::cout << "\n";
      }
      return 0;
    }

    if (*count_cmd) {
      Graph g = load_graph_file(count_in);
      std::cout << spanning_tree_count(g).str() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
