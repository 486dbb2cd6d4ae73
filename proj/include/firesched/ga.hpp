#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "firesched/baselines.hpp"
#include "firesched/chromosome.hpp"
#include "firesched/rng.hpp"
#include "firesched/scenario.hpp"
#include "firesched/scheduling.hpp"

namespace firesched {

struct GaConfig {
  int population_size = 10;
  int generations = 50;
  double crossover_prob = 0.8;
  double mutation_prob = 0.01;            // mu
  double infeasibility_threshold = 0.2;   // gamma: ratio above which mutation always fires
  int elite_count = 5;
  double kappa = 1e6;                     // s, penalty per infeasible task
  int init_max_infeasible = 4;            // accepted infeasible tasks per initial draw
  int init_attempt_cap = 1000;            // draws per slot before settling for best-seen
  bool seed_greedy = true;                // seed one slot with the EDF plan when n/m > 4
  std::uint64_t rng_seed = 0;
};

inline void validate(const GaConfig& c) {
  if (c.population_size < 1) throw std::invalid_argument("ga: population_size < 1");
  if (c.generations < 1) throw std::invalid_argument("ga: generations < 1");
  if (c.crossover_prob < 0.0 || c.crossover_prob > 1.0 ||
      c.mutation_prob < 0.0 || c.mutation_prob > 1.0 ||
      c.infeasibility_threshold < 0.0 || c.infeasibility_threshold > 1.0)
    throw std::invalid_argument("ga: probabilities must be in [0, 1]");
  if (c.elite_count < 0 || c.elite_count > c.population_size)
    throw std::invalid_argument("ga: elite_count must be in [0, population_size]");
  if (c.init_attempt_cap < 1) throw std::invalid_argument("ga: init_attempt_cap < 1");
  if (!(c.kappa > 0.0)) throw std::invalid_argument("ga: kappa must be positive");
}

struct GenerationStats {
  int generation = 0;
  double best_fitness = 0.0;
  double avg_fitness = 0.0;
  int population_size = 0;
  int feasible_count = 0;  // individuals with zero infeasible tasks
};

struct GaResult {
  TwoPartChromosome best_chromosome;
  double best_fitness = 0.0;
  ScheduleEvaluation best_eval;
  std::vector<TwoPartChromosome> final_population;
  std::vector<double> final_fitness;
  std::vector<GenerationStats> per_generation;
};

// Random chromosomes are accepted once they carry at most init_max_infeasible
// infeasible tasks; after init_attempt_cap draws the best seen is kept. When
// the task-to-agent ratio exceeds 4 a deadline-driven seed plan joins the
// population, since random draws alone rarely reach that regime's narrow
// feasible region.
inline std::vector<TwoPartChromosome> initialize_population(const Scenario& scenario,
                                                            const GaConfig& config,
                                                            Rng& rng) {
  const int n = scenario.fire_count();
  const int m = scenario.uav_count();
  std::vector<TwoPartChromosome> population;
  population.reserve(config.population_size);
  if (config.seed_greedy && n > 4 * m && config.population_size > 0)
    population.push_back(encode(earliest_deadline_first(scenario)));

  while (static_cast<int>(population.size()) < config.population_size) {
    TwoPartChromosome best;
    int best_infeasible = std::numeric_limits<int>::max();
    for (int attempt = 0; attempt < config.init_attempt_cap; ++attempt) {
      TwoPartChromosome candidate = random_chromosome(n, m, rng);
      const int infeasible =
          evaluate(decode(candidate), scenario, config.kappa).infeasible_count;
      if (infeasible < best_infeasible) {
        best_infeasible = infeasible;
        best = std::move(candidate);
      }
      if (best_infeasible <= config.init_max_infeasible) break;
    }
    population.push_back(std::move(best));
  }
  return population;
}

// Truncation selection: indices of the best ceil(N/2) individuals,
// best-first, ties broken by insertion order.
inline std::vector<std::size_t> select_parents(const std::vector<double>& fitness,
                                               const GaConfig&) {
  std::vector<std::size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
  order.resize((fitness.size() + 1) / 2);
  return order;
}

namespace detail {

// Head of one parent up to the cut, completed with the remaining ids in the
// order the other parent visits them. Order-preserving completion keeps
// subroutes from both parents alive; an ascending fill would collapse most
// children of similar parents back onto a parent. The donor also contributes
// the route lengths.
inline TwoPartChromosome cross_child(const TwoPartChromosome& head,
                                     const TwoPartChromosome& donor, int cut) {
  const int n = static_cast<int>(head.task_order.size());
  TwoPartChromosome child;
  child.task_order.assign(head.task_order.begin(), head.task_order.begin() + cut);
  child.task_order.reserve(n);
  std::vector<char> used(n + 1, 0);
  for (int id : child.task_order) used[id] = 1;
  for (int id : donor.task_order)
    if (!used[id]) child.task_order.push_back(id);
  child.route_lengths = donor.route_lengths;
  return child;
}

}  // namespace detail

// Single-point crossover on the task permutation; each child keeps one
// parent's head and completes it in the other parent's visiting order, and
// the children swap route-length parts. Below crossover_prob the parents
// pass through.
inline std::pair<TwoPartChromosome, TwoPartChromosome> crossover(
    const TwoPartChromosome& parent_a, const TwoPartChromosome& parent_b,
    double crossover_prob, Rng& rng) {
  const int n = static_cast<int>(parent_a.task_order.size());
  if (parent_b.task_order.size() != parent_a.task_order.size() ||
      parent_b.route_lengths.size() != parent_a.route_lengths.size())
    throw std::invalid_argument("crossover: parents of different shape");
  if (rng.uniform() >= crossover_prob || n < 2)
    return {parent_a, parent_b};

  const int cut = 1 + static_cast<int>(rng.uniform_int(n - 1));
  return {detail::cross_child(parent_a, parent_b, cut),
          detail::cross_child(parent_b, parent_a, cut)};
}

namespace detail {

// One uniformly random structural edit, used to make duplicate offspring
// unique: swap two task positions, swap two route lengths, or move one task
// slot between routes. The last move is the only way new route-length values
// enter the gene pool after initialization.
inline TwoPartChromosome nudge(TwoPartChromosome c, Rng& rng) {
  const int n = static_cast<int>(c.task_order.size());
  const int m = static_cast<int>(c.route_lengths.size());
  const double kind = rng.uniform();
  if ((kind < 0.5 || m < 2) && n > 1) {
    int i = static_cast<int>(rng.uniform_int(n));
    int j = static_cast<int>(rng.uniform_int(n - 1));
    if (j >= i) ++j;
    std::swap(c.task_order[i], c.task_order[j]);
  } else if (kind < 0.75 && m > 1) {
    int i = static_cast<int>(rng.uniform_int(m));
    int j = static_cast<int>(rng.uniform_int(m - 1));
    if (j >= i) ++j;
    std::swap(c.route_lengths[i], c.route_lengths[j]);
  } else if (m > 1) {
    int from = static_cast<int>(rng.uniform_int(m));
    int to = static_cast<int>(rng.uniform_int(m - 1));
    if (to >= from) ++to;
    if (c.route_lengths[from] > 1) {
      --c.route_lengths[from];
      ++c.route_lengths[to];
    }
  }
  return c;
}

// Fire id with the smallest slack (deadline - start), i.e. the task closest
// to or deepest into violation. Ties go to the lower id.
inline int min_slack_fire(const ScheduleEvaluation& ev) {
  int fire = ev.timings.front().fire_id;
  double min_slack = std::numeric_limits<double>::infinity();
  for (const TaskTiming& t : ev.timings) {
    const double slack = t.deadline - t.start_time;
    if (slack < min_slack) {
      min_slack = slack;
      fire = t.fire_id;
    }
  }
  return fire;
}

}  // namespace detail

// Infeasibility-targeted swap mutation. Fires when the uniform draw lands
// below mu or the chromosome's infeasible ratio exceeds gamma. The task with
// minimum slack is swapped to a random position in the first part; in the
// second part its route's length trades places with a random other route.
inline TwoPartChromosome mutate(const TwoPartChromosome& chromosome,
                                const ScheduleEvaluation& ev, const GaConfig& config,
                                Rng& rng) {
  const double draw = rng.uniform();
  if (!(draw < config.mutation_prob ||
        ev.infeasible_ratio > config.infeasibility_threshold))
    return chromosome;

  TwoPartChromosome mutant = chromosome;
  const int n = static_cast<int>(mutant.task_order.size());
  const int m = static_cast<int>(mutant.route_lengths.size());
  const int target = detail::min_slack_fire(ev);

  if (n > 1) {
    int pos = 0;
    while (mutant.task_order[pos] != target) ++pos;
    int other = static_cast<int>(rng.uniform_int(n - 1));
    if (other >= pos) ++other;
    std::swap(mutant.task_order[pos], mutant.task_order[other]);
  }
  if (m > 1) {
    const int route = ev.timings[target - 1].uav_id - 1;
    int other = static_cast<int>(rng.uniform_int(m - 1));
    if (other >= route) ++other;
    std::swap(mutant.route_lengths[route], mutant.route_lengths[other]);
  }
  return mutant;
}

// Generational loop: evaluate, truncate-select, recombine each parent with
// its next-best neighbour around the cycle (so k parents yield 2k offspring),
// mutate offspring per the guard, then assemble the next generation from the
// elites plus the unique offspring. Offspring that collide with an elite or
// an earlier sibling are nudged by random swaps until unique rather than
// silently dropped; without that pressure the population collapses onto the
// elites within a few generations and the search stalls. Population size is
// free to grow, which matches the reported behaviour of final populations
// several times the initial size. Elites pass through untouched, so the
// per-generation best fitness never increases.
inline GaResult evolve(const Scenario& scenario, const GaConfig& config) {
  validate(config);
  Rng rng(derive_seed(config.rng_seed, kStreamGa));

  std::vector<TwoPartChromosome> population =
      initialize_population(scenario, config, rng);
  std::vector<ScheduleEvaluation> evals;
  std::vector<double> fitness;

  const auto evaluate_all = [&] {
    evals.clear();
    fitness.clear();
    evals.reserve(population.size());
    fitness.reserve(population.size());
    for (const TwoPartChromosome& c : population) {
      evals.push_back(evaluate(decode(c), scenario, config.kappa));
      fitness.push_back(evals.back().fitness);
    }
  };

  GaResult result;
  const auto record_stats = [&](int generation) {
    GenerationStats stats;
    stats.generation = generation;
    stats.population_size = static_cast<int>(population.size());
    stats.best_fitness = *std::min_element(fitness.begin(), fitness.end());
    stats.avg_fitness =
        std::accumulate(fitness.begin(), fitness.end(), 0.0) / fitness.size();
    for (const ScheduleEvaluation& ev : evals)
      if (ev.infeasible_count == 0) ++stats.feasible_count;
    result.per_generation.push_back(stats);
  };

  for (int generation = 0; generation < config.generations; ++generation) {
    evaluate_all();
    record_stats(generation);

    const std::vector<std::size_t> parents = select_parents(fitness, config);

    std::vector<std::size_t> elite_order(population.size());
    std::iota(elite_order.begin(), elite_order.end(), 0);
    std::stable_sort(elite_order.begin(), elite_order.end(), [&](std::size_t a, std::size_t b) {
      return fitness[a] < fitness[b];
    });
    elite_order.resize(std::min<std::size_t>(config.elite_count, elite_order.size()));

    std::vector<TwoPartChromosome> next;
    for (std::size_t e : elite_order) next.push_back(population[e]);

    for (std::size_t p = 0; p < parents.size(); ++p) {
      const std::size_t a = parents[p];
      const std::size_t b = parents[(p + 1) % parents.size()];
      auto [child_a, child_b] =
          crossover(population[a], population[b], config.crossover_prob, rng);
      for (TwoPartChromosome* child : {&child_a, &child_b}) {
        const ScheduleEvaluation child_ev =
            evaluate(decode(*child), scenario, config.kappa);
        TwoPartChromosome unique = mutate(*child, child_ev, config, rng);
        for (int tries = 0;
             std::find(next.begin(), next.end(), unique) != next.end() && tries < 50;
             ++tries)
          unique = detail::nudge(std::move(unique), rng);
        if (std::find(next.begin(), next.end(), unique) == next.end())
          next.push_back(std::move(unique));
      }
    }
    population = std::move(next);
  }

  evaluate_all();
  record_stats(config.generations);

  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i)
    if (fitness[i] < fitness[best]) best = i;
  result.best_chromosome = population[best];
  result.best_fitness = fitness[best];
  result.best_eval = evals[best];
  result.final_population = std::move(population);
  result.final_fitness = std::move(fitness);
  return result;
}

inline std::string stats_csv(const std::vector<GenerationStats>& stats) {
  std::string csv = "generation,best_J,avg_J,population_size,feasible_route_count\n";
  char line[160];
  for (const GenerationStats& s : stats) {
    std::snprintf(line, sizeof line, "%d,%.9g,%.9g,%d,%d\n", s.generation,
                  s.best_fitness, s.avg_fitness, s.population_size, s.feasible_count);
    csv += line;
  }
  return csv;
}

}  // namespace firesched
