#include "spantree/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "spantree/spanning.hpp"

namespace spantree {

void GaConfig::validate() const {
  if (model != 1 && model != 2) throw std::invalid_argument("model must be 1 or 2");
  if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
  if (max_generations < 0) throw std::invalid_argument("max_generations must be >= 0");
  if (stall_generations < 1) throw std::invalid_argument("stall_generations must be >= 1");
  if (tournament_size < 1) throw std::invalid_argument("tournament_size must be >= 1");
  if (crossover_rate < 0 || crossover_rate > 1)
    throw std::invalid_argument("crossover_rate must be in [0,1]");
  if (mutation_rate > 1) throw std::invalid_argument("mutation_rate must be <= 1");
  if (elitism_count < 0 || elitism_count >= population_size)
    throw std::invalid_argument("elitism_count must be in [0, population_size)");
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

int GaConfig::model2_length(const Graph& g) const {
  int target = static_cast<int>(std::ceil(alpha * (g.vertex_count() - 1)));
  return std::min(g.edge_count(), std::max(target, g.vertex_count() - 1));
}

double penalty_base(const Graph& g, const ObjectiveSpec& spec) {
  const double n = g.vertex_count();
  switch (spec.kind) {
    case ObjectiveSpec::Kind::wiener:
      return n * n * n;
    case ObjectiveSpec::Kind::subtree_count:
      return std::ldexp(1.0, g.vertex_count() - 1) + n + 1.0;
    default:
      return 2.0 * n * n * std::pow(std::max(1.0, n - 1), spec.largest_exponent()) + 1.0;
  }
}

namespace detail {

double normalize(double raw, Sense sense) {
  return sense == Sense::minimize ? raw : -raw;
}

}  // namespace detail

namespace {

detail::FitnessEval evaluate_model(const Graph& g, const EdgeSelection& chromosome,
                                   const ObjectiveSpec& spec, int model, double base) {
  detail::FitnessEval eval;
  const int depth = spec.required_depth(g.vertex_count());
  const bool pairs = spec.required_pair_depth() > 0;

  if (model == 1 || g.vertex_count() == 1) {
    DecodeResult decoded = decode_tree(g, chromosome, depth, pairs);
    if (!decoded.tree) {
      eval.fitness = base + (decoded.component_count - 1);
      return eval;
    }
    eval.raw = evaluate(*decoded.tree, spec);
    eval.fitness = detail::normalize(eval.raw, spec.sense);
    eval.feasible = true;
    eval.decoded = chromosome;
    std::sort(eval.decoded.begin(), eval.decoded.end());
    return eval;
  }

  KruskalResult kruskal = kruskal_decode(g, chromosome);
  if (!kruskal.is_spanning_tree) {
    eval.fitness = base + (kruskal.component_count - 1);
    return eval;
  }
  DecodeResult decoded = decode_tree(g, kruskal.tree_labels, depth, pairs);
  eval.raw = evaluate(*decoded.tree, spec);
  eval.fitness = detail::normalize(eval.raw, spec.sense);
  eval.feasible = true;
  eval.decoded = kruskal.tree_labels;
  std::sort(eval.decoded.begin(), eval.decoded.end());
  return eval;
}

}  // namespace

double fitness(const Graph& g, const EdgeSelection& chromosome,
               const ObjectiveSpec& spec, int model) {
  if (model != 1 && model != 2) throw std::invalid_argument("model must be 1 or 2");
  if (model == 1 && static_cast<int>(chromosome.size()) != g.vertex_count() - 1)
    throw std::invalid_argument("model 1 chromosome must have N-1 genes");
  spec.validate(g.vertex_count());
  return evaluate_model(g, chromosome, spec, model, penalty_base(g, spec)).fitness;
}

namespace detail {

namespace {

class Crossover {
 public:
  Crossover(int length, int label_count)
      : length_(length), used_(static_cast<std::size_t>(label_count) + 1, 0) {}

  // Position-wise uniform pick from the parents' genes; duplicate picks leave
  // holes that are padded with random unused labels.
  EdgeSelection combine(const EdgeSelection& a, const EdgeSelection& b, Rng& rng) {
    std::fill(used_.begin(), used_.end(), 0);
    EdgeSelection child(static_cast<std::size_t>(length_), 0);
    for (int i = 0; i < length_; ++i) {
      int gene = rng.next_bool() ? a[static_cast<std::size_t>(i)] : b[static_cast<std::size_t>(i)];
      if (!used_[static_cast<std::size_t>(gene)]) {
        used_[static_cast<std::size_t>(gene)] = 1;
        child[static_cast<std::size_t>(i)] = gene;
      }
    }
    for (int i = 0; i < length_; ++i)
      if (child[static_cast<std::size_t>(i)] == 0)
        child[static_cast<std::size_t>(i)] = draw_unused(rng);
    return child;
  }

  void mutate(EdgeSelection& chromosome, double rate, Rng& rng) {
    std::fill(used_.begin(), used_.end(), 0);
    for (int gene : chromosome) used_[static_cast<std::size_t>(gene)] = 1;
    for (auto& gene : chromosome) {
      if (rng.next_double() < rate) {
        used_[static_cast<std::size_t>(gene)] = 0;
        gene = draw_unused(rng);
      }
    }
  }

 private:
  int draw_unused(Rng& rng) {
    const int label_count = static_cast<int>(used_.size()) - 1;
    int gene;
    do {
      gene = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(label_count)));
    } while (used_[static_cast<std::size_t>(gene)]);
    used_[static_cast<std::size_t>(gene)] = 1;
    return gene;
  }

  int length_;
  std::vector<char> used_;
};

void evaluate_batch(const GaProblem& problem, const std::vector<EdgeSelection>& chromosomes,
                    std::vector<FitnessEval>& out, int threads) {
  out.resize(chromosomes.size());
  const std::size_t count = chromosomes.size();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = problem.evaluate(chromosomes[i]);
    return;
  }
  const int workers = std::min<int>(threads, static_cast<int>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(workers))
        out[i] = problem.evaluate(chromosomes[i]);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

SolveResult run_ga(const GaProblem& problem, const GaConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const int pop_size = cfg.population_size;
  const int length = problem.chromosome_length;
  const double mutation_rate =
      cfg.mutation_rate >= 0 ? cfg.mutation_rate : 1.0 / std::max(1, length);

  Rng rng(cfg.seed);
  std::vector<EdgeSelection> population(static_cast<std::size_t>(pop_size));
  for (auto& individual : population) individual = problem.make_individual(rng);

  SolveResult result;
  std::vector<FitnessEval> evals;
  evaluate_batch(problem, population, evals, cfg.threads);
  result.evaluations = pop_size;

  double best_fitness = std::numeric_limits<double>::infinity();
  FitnessEval best;
  auto consider = [&](const FitnessEval& eval, int generation) {
    if (eval.fitness < best_fitness) {
      best_fitness = eval.fitness;
      best = eval;
      result.best_found_generation = generation;
      return true;
    }
    return false;
  };
  for (const auto& eval : evals) consider(eval, 0);
  // Before any feasible individual exists the best penalty value stands in.
  auto history_entry = [&] { return best.feasible ? best.raw : best_fitness; };
  result.history.push_back(history_entry());

  auto tournament = [&]() -> int {
    int winner = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(pop_size)));
    for (int k = 1; k < cfg.tournament_size; ++k) {
      int rival = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(pop_size)));
      if (evals[static_cast<std::size_t>(rival)].fitness <
          evals[static_cast<std::size_t>(winner)].fitness)
        winner = rival;
    }
    return winner;
  };

  Crossover crossover(length, problem.label_count);
  std::vector<EdgeSelection> offspring;
  std::vector<FitnessEval> offspring_evals;
  std::vector<int> rank(static_cast<std::size_t>(pop_size));
  int stall = 0;

  for (int generation = 1; generation <= cfg.max_generations && length > 0; ++generation) {
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
      return evals[static_cast<std::size_t>(a)].fitness <
             evals[static_cast<std::size_t>(b)].fitness;
    });

    offspring.clear();
    for (int e = 0; e < cfg.elitism_count; ++e)
      offspring.push_back(population[static_cast<std::size_t>(rank[static_cast<std::size_t>(e)])]);

    std::vector<EdgeSelection> fresh;
    while (static_cast<int>(offspring.size() + fresh.size()) < pop_size) {
      const EdgeSelection& a = population[static_cast<std::size_t>(tournament())];
      const EdgeSelection& b = population[static_cast<std::size_t>(tournament())];
      EdgeSelection child =
          rng.next_double() < cfg.crossover_rate ? crossover.combine(a, b, rng) : a;
      crossover.mutate(child, mutation_rate, rng);
      fresh.push_back(std::move(child));
    }

    evaluate_batch(problem, fresh, offspring_evals, cfg.threads);
    result.evaluations += static_cast<std::int64_t>(fresh.size());

    // Elites keep their cached evaluations.
    std::vector<FitnessEval> next_evals;
    next_evals.reserve(static_cast<std::size_t>(pop_size));
    for (int e = 0; e < cfg.elitism_count; ++e)
      next_evals.push_back(evals[static_cast<std::size_t>(rank[static_cast<std::size_t>(e)])]);
    for (auto& eval : offspring_evals) next_evals.push_back(std::move(eval));
    for (auto& chromosome : fresh) offspring.push_back(std::move(chromosome));

    population.swap(offspring);
    evals.swap(next_evals);
    result.generations_run = generation;

    bool improved = false;
    for (const auto& eval : evals) improved |= consider(eval, generation);
    result.history.push_back(history_entry());
    stall = improved ? 0 : stall + 1;
    if (stall >= cfg.stall_generations) break;
  }

  result.feasible = best.feasible;
  if (best.feasible) {
    result.best_selection = best.decoded;
    result.best_value = best.raw;
  }
  result.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return result;
}

}  // namespace detail

SolveResult solve(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg) {
  cfg.validate();
  spec.validate(g.vertex_count());
  if (!g.is_connected())
    throw std::invalid_argument("graph is disconnected: no spanning tree exists");

  const double base = penalty_base(g, spec);
  detail::GaProblem problem;
  problem.label_count = g.edge_count();
  problem.evaluate = [&g, spec, model = cfg.model, base](const EdgeSelection& chromosome) {
    return evaluate_model(g, chromosome, spec, model, base);
  };

  if (cfg.model == 1) {
    problem.chromosome_length = g.vertex_count() - 1;
    problem.make_individual = [&g](Rng& rng) { return random_spanning_tree(g, rng); };
  } else {
    const int length = cfg.model2_length(g);
    problem.chromosome_length = length;
    problem.make_individual = [&g, length](Rng& rng) {
      EdgeSelection genes = random_spanning_tree(g, rng);
      std::vector<char> used(static_cast<std::size_t>(g.edge_count()) + 1, 0);
      for (int gene : genes) used[static_cast<std::size_t>(gene)] = 1;
      while (static_cast<int>(genes.size()) < length) {
        int gene = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.edge_count())));
        if (!used[static_cast<std::size_t>(gene)]) {
          used[static_cast<std::size_t>(gene)] = 1;
          genes.push_back(gene);
        }
      }
      return genes;
    };
  }

  SolveResult result = detail::run_ga(problem, cfg);
  if (!result.feasible)
    throw std::runtime_error("GA found no feasible spanning tree (pathological configuration)");
  return result;
}

SolveResult solve_exact(const Graph& g, const ObjectiveSpec& spec, std::uint64_t cap) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate(g.vertex_count());
  BigInt count = spanning_tree_count(g);
  if (count == 0)
    throw std::invalid_argument("graph is disconnected: no spanning tree exists");
  if (count > cap) throw EnumerationCapExceeded(count, cap);

  const int depth = spec.required_depth(g.vertex_count());
  const bool pairs = spec.required_pair_depth() > 0;

  SolveResult result;
  double best_fitness = std::numeric_limits<double>::infinity();
  for_each_spanning_tree(g, [&](const EdgeSelection& sel) {
    ++result.evaluations;
    DecodeResult decoded = decode_tree(g, sel, depth, pairs);
    double raw = evaluate(*decoded.tree, spec);
    double fit = detail::normalize(raw, spec.sense);
    if (fit < best_fitness) {
      best_fitness = fit;
      result.best_value = raw;
      result.best_selection = sel;
    }
  });
  result.feasible = true;
  result.best_found_generation = 0;
  result.history.push_back(result.best_value);
  result.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return result;
}

}  // namespace spantree
