#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/metrics.hpp"
#include "spantree/rng.hpp"

namespace spantree {

struct GaConfig {
  int model = 2;                   // 1 = direct edge set, 2 = Kruskal decoded
  int population_size = 200;
  int max_generations = 500;
  int stall_generations = 50;
  int tournament_size = 3;
  double crossover_rate = 0.9;
  double mutation_rate = -1.0;     // per gene; < 0 means 1/chromosome_length
  int elitism_count = 2;
  double alpha = 2.0;              // model 2 chromosome length factor
  std::uint64_t seed = 1;
  int threads = 1;                 // fitness evaluation workers; no effect on results

  void validate() const;
  /// Model 2 chromosome length: min(|E|, ceil(alpha * (N-1))).
  int model2_length(const Graph& g) const;
};

struct SolveResult {
  EdgeSelection best_selection;    // decoded tree labels, ascending
  double best_value = 0.0;         // raw objective value
  bool feasible = false;
  int generations_run = 0;         // offspring generations (0 = initial only)
  int best_found_generation = -1;  // generation the best value first appeared
  std::int64_t evaluations = 0;
  std::vector<double> history;     // best-so-far raw value per generation
  double wall_time_ms = 0.0;
};

/// Penalty base B: strictly larger than any sense-normalized feasible value
/// of the objective on the given graph.
double penalty_base(const Graph& g, const ObjectiveSpec& spec);

/// Chromosome fitness under the minimization convention. Feasible trees give
/// the sense-normalized objective; infeasible selections give
/// B + (components - 1).
double fitness(const Graph& g, const EdgeSelection& chromosome,
               const ObjectiveSpec& spec, int model);

/// Generational GA over edge-label chromosomes (Model 1 decodes directly,
/// Model 2 through Kruskal).
SolveResult solve(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg);

/// Exact optimum by evaluating every spanning tree; throws
/// EnumerationCapExceeded when the graph has more than cap trees.
SolveResult solve_exact(const Graph& g, const ObjectiveSpec& spec,
                        std::uint64_t cap = 1000000);

namespace detail {

struct FitnessEval {
  double fitness = 0.0;
  double raw = 0.0;
  bool feasible = false;
  EdgeSelection decoded;  // tree labels when feasible
};

struct GaProblem {
  int chromosome_length = 0;
  int label_count = 0;
  std::function<EdgeSelection(Rng&)> make_individual;
  std::function<FitnessEval(const EdgeSelection&)> evaluate;  // pure
};

SolveResult run_ga(const GaProblem& problem, const GaConfig& cfg);

double normalize(double raw, Sense sense);

}  // namespace detail

}  // namespace spantree
