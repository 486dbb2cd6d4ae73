// Command-line front end: generate scenarios, solve them, verify plans
// against the ODE oracle, run Monte-Carlo campaigns, and emit route plots.
// Every subcommand is a pure function of its inputs and declared seeds.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "firesched/firesched.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void add_spec_options(CLI::App* cmd, firesched::ScenarioSpec& spec) {
  cmd->add_option("--uavs", spec.uav_count, "Number of UAVs");
  cmd->add_option("--fires", spec.fire_count, "Number of fires");
  cmd->add_option("--radius-min", spec.radius_min, "Minimum initial fire radius, m");
  cmd->add_option("--radius-max", spec.radius_max, "Maximum initial fire radius, m");
  cmd->add_option("--spread-rate", spec.params.spread_rate, "Radial fire spread rate, m/s");
  cmd->add_option("--quench-rate", spec.params.quench_rate, "UAV area quench rate, m^2/s");
  cmd->add_option("--speed", spec.params.uav_speed, "UAV speed, m/s");
  cmd->add_option("--width", spec.bounds.w, "Mission area width, m");
  cmd->add_option("--height", spec.bounds.h, "Mission area height, m");
  cmd->add_option("--seed", spec.seed, "Scenario seed");
}

int report_plan(const firesched::ScheduleEvaluation& ev) {
  if (ev.infeasible_count == 0) {
    std::printf("feasible plan: fitness %.6g s, makespan %.6g s\n", ev.fitness,
                ev.makespan);
    return kExitOk;
  }
  std::fprintf(stderr, "%d infeasible task(s):\n", ev.infeasible_count);
  for (const firesched::TaskTiming& t : ev.timings)
    if (!t.feasible)
      std::fprintf(stderr, "  fire %d (uav %d): start %.3f s >= deadline %.3f s\n",
                   t.fire_id, t.uav_id, t.start_time, t.deadline);
  return kExitInfeasible;
}

int run_generate(const firesched::ScenarioSpec& spec, const std::string& out) {
  firesched::Scenario scenario = firesched::generate(spec);
  write_file(out, firesched::save(scenario));
  std::printf("wrote %s (%d fires, %d uavs)\n", out.c_str(), scenario.fire_count(),
              scenario.uav_count());
  return kExitOk;
}

int run_solve(const std::string& scenario_path, const firesched::GaConfig& config,
              const std::string& out, const std::string& stats_path,
              const std::string& plot_path) {
  const firesched::Scenario scenario = firesched::load(read_file(scenario_path));
  const firesched::GaResult result = firesched::evolve(scenario, config);
  const firesched::RoutePlan plan = firesched::decode(result.best_chromosome);
  if (!out.empty()) write_file(out, firesched::save_plan(plan, result.best_eval));
  if (!stats_path.empty()) write_file(stats_path, firesched::stats_csv(result.per_generation));
  if (!plot_path.empty()) write_file(plot_path, firesched::plot_svg(plan, scenario));
  return report_plan(result.best_eval);
}

int run_baseline(const std::string& scenario_path, const std::string& method,
                 const std::string& out) {
  const firesched::Scenario scenario = firesched::load(read_file(scenario_path));
  firesched::RoutePlan plan;
  if (method == "greedy") {
    plan = firesched::greedy_nearest(scenario);
  } else if (method == "edf") {
    plan = firesched::earliest_deadline_first(scenario);
  } else {
    throw std::runtime_error("unknown baseline method: " + method);
  }
  const firesched::ScheduleEvaluation ev = firesched::evaluate(plan, scenario, 1e6);
  if (!out.empty()) write_file(out, firesched::save_plan(plan, ev));
  return report_plan(ev);
}

// Replay the plan against the RK4 integrator: growth up to each start time,
// then suppression to extinction, comparing against the closed-form schedule.
int run_verify(const std::string& plan_path, const std::string& scenario_path,
               double step) {
  const firesched::Scenario scenario = firesched::load(read_file(scenario_path));
  const firesched::RoutePlan plan = firesched::load_plan(read_file(plan_path));
  const firesched::ScheduleEvaluation ev = firesched::evaluate(plan, scenario, 1e6);

  std::printf("%5s %4s %12s %12s %10s %13s %13s %9s\n", "fire", "uav", "start_s",
              "deadline_s", "feasible", "quench_s", "quench_ode_s", "rel_err");
  double max_rel_err = 0.0;
  for (const firesched::TaskTiming& t : ev.timings) {
    if (!t.feasible) {
      std::printf("%5d %4d %12.3f %12.3f %10s %13s %13s %9s\n", t.fire_id, t.uav_id,
                  t.start_time, t.deadline, "no", "-", "-", "-");
      continue;
    }
    const firesched::OdeTrace quench = firesched::integrate_fire(
        t.area_at_start, scenario.params, true, step, 10.0 * t.quench_duration + 1.0);
    const double ode_time = quench.terminal_time();
    const double rel_err =
        std::abs(ode_time - t.quench_duration) / std::max(1e-12, t.quench_duration);
    max_rel_err = std::max(max_rel_err, rel_err);
    std::printf("%5d %4d %12.3f %12.3f %10s %13.4f %13.4f %9.2e\n", t.fire_id,
                t.uav_id, t.start_time, t.deadline, "yes", t.quench_duration, ode_time,
                rel_err);
  }
  std::printf("infeasible tasks: %d, max quench rel err: %.2e\n", ev.infeasible_count,
              max_rel_err);
  if (ev.infeasible_count > 0 || max_rel_err > 1e-3) return kExitInfeasible;
  return kExitOk;
}

int run_montecarlo(const firesched::ScenarioSpec& spec, const firesched::GaConfig& ga,
                   int iterations, std::uint64_t master_seed, const std::string& out,
                   const std::string& summary_path, const std::string& csv_path) {
  const firesched::CampaignResult result =
      firesched::run_campaign(spec, iterations, master_seed, ga);
  if (!out.empty()) write_file(out, firesched::records_jsonl(result.records));
  if (!summary_path.empty())
    write_file(summary_path, firesched::summary_json(result, spec, master_seed));
  if (!csv_path.empty())
    write_file(csv_path, firesched::summary_csv(result.metrics, spec.fire_count));
  std::printf("%d iterations: success %.1f%%, completion %.2f min, quench %.2f min, "
              "FER %.2f\n",
              result.metrics.iterations, result.metrics.success_rate,
              result.metrics.mean_completion_time_min,
              result.metrics.mean_quench_time_min, result.metrics.mean_fer);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Route and schedule a UAV fleet to quench growing fires"};
  app.require_subcommand(1);

  firesched::ScenarioSpec spec;
  firesched::GaConfig ga;

  auto* generate = app.add_subcommand("generate", "Generate a random scenario file");
  std::string generate_out;
  add_spec_options(generate, spec);
  generate->add_option("-o,--output", generate_out, "Scenario file to write")->required();

  auto* solve = app.add_subcommand("solve", "Optimize routes for a scenario file");
  std::string solve_scenario, solve_out, solve_stats, solve_plot;
  solve->add_option("scenario", solve_scenario, "Scenario file")->required();
  solve->add_option("--pop", ga.population_size, "Initial population size");
  solve->add_option("--gens", ga.generations, "Number of generations");
  solve->add_option("--cx", ga.crossover_prob, "Crossover probability");
  solve->add_option("--mu", ga.mutation_prob, "Mutation probability");
  solve->add_option("--gamma", ga.infeasibility_threshold,
                    "Infeasible-ratio mutation threshold");
  solve->add_option("--elites", ga.elite_count, "Elite count");
  solve->add_option("--kappa", ga.kappa, "Infeasible-task penalty, s");
  solve->add_option("--seed", ga.rng_seed, "Optimizer seed");
  solve->add_flag("--seed-greedy,!--no-seed-greedy", ga.seed_greedy,
                  "Seed one slot with the deadline-first plan when fires/uavs > 4");
  solve->add_option("-o,--output", solve_out, "Plan file to write");
  solve->add_option("--stats", solve_stats, "Per-generation stats CSV to write");
  solve->add_option("--plot", solve_plot, "Route plot SVG to write");

  auto* verify = app.add_subcommand("verify", "Replay a plan against the ODE oracle");
  std::string verify_plan, verify_scenario;
  double verify_step = 1e-3;
  verify->add_option("plan", verify_plan, "Plan file")->required();
  verify->add_option("scenario", verify_scenario, "Scenario file")->required();
  verify->add_option("--step", verify_step, "RK4 step, s");

  auto* montecarlo = app.add_subcommand("montecarlo", "Run a Monte-Carlo campaign");
  int mc_iterations = 100;
  std::uint64_t mc_master_seed = 0;
  std::string mc_out, mc_summary, mc_csv;
  add_spec_options(montecarlo, spec);
  montecarlo->add_option("--iterations", mc_iterations, "Campaign iterations");
  montecarlo->add_option("--master-seed", mc_master_seed, "Campaign master seed");
  montecarlo->add_option("--pop", ga.population_size, "Initial population size");
  montecarlo->add_option("--gens", ga.generations, "Number of generations");
  montecarlo->add_option("-o,--output", mc_out, "Per-iteration JSONL to write");
  montecarlo->add_option("--summary", mc_summary, "Summary JSON to write");
  montecarlo->add_option("--csv", mc_csv, "Summary CSV to write");

  auto* baseline = app.add_subcommand("baseline", "Run a reference heuristic");
  std::string baseline_scenario, baseline_method = "greedy", baseline_out;
  baseline->add_option("scenario", baseline_scenario, "Scenario file")->required();
  baseline->add_option("--method", baseline_method, "greedy or edf");
  baseline->add_option("-o,--output", baseline_out, "Plan file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (generate->parsed()) return run_generate(spec, generate_out);
    if (solve->parsed()) return run_solve(solve_scenario, ga, solve_out, solve_stats, solve_plot);
    if (verify->parsed()) return run_verify(verify_plan, verify_scenario, verify_step);
    if (montecarlo->parsed())
      return run_montecarlo(spec, ga, mc_iterations, mc_master_seed, mc_out, mc_summary,
                            mc_csv);
    if (baseline->parsed()) return run_baseline(baseline_scenario, baseline_method, baseline_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
