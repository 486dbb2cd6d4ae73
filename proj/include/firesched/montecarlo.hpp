#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "firesched/ga.hpp"
#include "firesched/scenario.hpp"
#include "firesched/scheduling.hpp"

namespace firesched {

struct IterationRecord {
  int iteration = 0;
  std::uint64_t seed = 0;       // derived from (master_seed, iteration)
  bool success = false;
  double completion_time_s = 0.0;
  double total_quench_s = 0.0;
  double mean_fer = 0.0;        // over feasible fires of this iteration
  double best_fitness = 0.0;
};

struct McMetrics {
  int iterations = 0;
  double success_rate = 0.0;              // percent
  double mean_completion_time_min = 0.0;  // successful iterations only
  double mean_quench_time_min = 0.0;      // successful iterations only
  double mean_fer = 0.0;                  // all iterations, feasible fires
};

struct CampaignResult {
  McMetrics metrics;
  std::vector<IterationRecord> records;
};

// One campaign iteration is a pure function of (base_spec, ga, master_seed, k):
// the fire layout comes from base_spec.seed, while radii, UAV positions and
// the GA stream are redrawn from the per-iteration seed. Iterations can
// therefore run in any order, or be reproduced individually.
inline IterationRecord run_iteration(const ScenarioSpec& base_spec, const GaConfig& ga,
                                     std::uint64_t master_seed, int k) {
  IterationRecord rec;
  rec.iteration = k;
  rec.seed = derive_seed(master_seed, static_cast<std::uint64_t>(k));

  const Scenario scenario = generate_variation(base_spec, rec.seed);
  GaConfig config = ga;
  config.rng_seed = rec.seed;
  const GaResult result = evolve(scenario, config);

  rec.success = mission_success(result.best_eval);
  rec.completion_time_s = result.best_eval.makespan;
  rec.total_quench_s = result.best_eval.total_quench;
  rec.mean_fer = fire_expansion_ratios(result.best_eval, scenario).mean;
  rec.best_fitness = result.best_fitness;
  return rec;
}

inline McMetrics aggregate(const std::vector<IterationRecord>& records) {
  McMetrics metrics;
  metrics.iterations = static_cast<int>(records.size());
  int successes = 0;
  double completion = 0.0, quench = 0.0, fer = 0.0;
  for (const IterationRecord& rec : records) {
    fer += rec.mean_fer;
    if (!rec.success) continue;
    ++successes;
    completion += rec.completion_time_s;
    quench += rec.total_quench_s;
  }
  if (metrics.iterations > 0) {
    metrics.success_rate = 100.0 * successes / metrics.iterations;
    metrics.mean_fer = fer / metrics.iterations;
  }
  if (successes > 0) {
    metrics.mean_completion_time_min = completion / successes / 60.0;
    metrics.mean_quench_time_min = quench / successes / 60.0;
  }
  return metrics;
}

inline CampaignResult run_campaign(const ScenarioSpec& base_spec, int iterations,
                                   std::uint64_t master_seed, const GaConfig& ga = {}) {
  if (iterations < 1) throw std::invalid_argument("run_campaign: iterations < 1");
  validate(base_spec);
  CampaignResult result;
  result.records.reserve(iterations);
  for (int k = 0; k < iterations; ++k)
    result.records.push_back(run_iteration(base_spec, ga, master_seed, k));
  result.metrics = aggregate(result.records);
  return result;
}

inline std::string records_jsonl(const std::vector<IterationRecord>& records) {
  std::string out;
  for (const IterationRecord& rec : records) {
    nlohmann::json line = {{"iteration", rec.iteration},
                           {"seed", rec.seed},
                           {"success", rec.success},
                           {"completion_time_s", rec.completion_time_s},
                           {"total_quench_s", rec.total_quench_s},
                           {"mean_fer", rec.mean_fer},
                           {"best_J", rec.best_fitness}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

inline std::string summary_json(const CampaignResult& result, const ScenarioSpec& base_spec,
                                std::uint64_t master_seed) {
  const McMetrics& m = result.metrics;
  nlohmann::json doc = {
      {"iterations", m.iterations},
      {"fires", base_spec.fire_count},
      {"uavs", base_spec.uav_count},
      {"master_seed", master_seed},
      {"success_rate_percent", m.success_rate},
      {"mean_completion_time_min", m.mean_completion_time_min},
      {"mean_quench_time_min", m.mean_quench_time_min},
      {"mean_fer", m.mean_fer},
      {"aggregation",
       {{"completion_time_mean_over", "successful_iterations"},
        {"quench_time_mean_over", "successful_iterations"},
        {"fer_mean_over", "all_iterations_feasible_fires"}}},
  };
  return doc.dump(2) + "\n";
}

// One row per campaign, columns as reported by the summary tables.
inline std::string summary_csv(const McMetrics& m, int fires) {
  std::string csv =
      "fires,success_rate_percent,mean_completion_time_min,mean_quench_time_min,mean_fer\n";
  char line[160];
  std::snprintf(line, sizeof line, "%d,%.2f,%.2f,%.2f,%.2f\n", fires, m.success_rate,
                m.mean_completion_time_min, m.mean_quench_time_min, m.mean_fer);
  csv += line;
  return csv;
}

}  // namespace firesched
