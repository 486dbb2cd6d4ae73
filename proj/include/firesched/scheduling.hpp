#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "firesched/chromosome.hpp"
#include "firesched/fire_model.hpp"
#include "firesched/scenario.hpp"

namespace firesched {

struct TaskTiming {
  int fire_id = 0;
  int uav_id = 0;
  double start_time = 0.0;       // T^s, s
  double deadline = 0.0;         // T^d, s
  double quench_duration = 0.0;  // actual quench time, or kappa when infeasible
  double completion_time = 0.0;  // start + quench when feasible; arrival otherwise
  double area_at_start = 0.0;    // m^2
  bool feasible = false;         // start strictly before deadline
};

struct ScheduleEvaluation {
  std::vector<TaskTiming> timings;   // indexed by fire id - 1
  double fitness = 0.0;              // total quench time, penalties included
  int infeasible_count = 0;
  double infeasible_ratio = 0.0;
  double makespan = 0.0;             // last completion among feasible tasks
  double total_quench = 0.0;         // feasible tasks only
  std::vector<double> per_fire_fer;  // (area at start - A0) / A0, by fire id
};

// Walk every route front to back: travel at constant speed, quench feasible
// fires to extinction, fly through infeasible ones without stopping (their
// penalty lands only in the fitness, and downstream arrivals stay visible to
// the optimizer). Feasibility is the strict start < deadline test; the
// equivalent area < critical check is kept alongside so quench_time is never
// asked to cross the singularity through rounding.
inline ScheduleEvaluation evaluate(const RoutePlan& plan, const Scenario& scenario,
                                   double kappa) {
  const int n = scenario.fire_count();
  const int m = scenario.uav_count();
  if (static_cast<int>(plan.routes.size()) != m)
    throw std::invalid_argument("evaluate: plan has wrong number of routes");
  {
    std::vector<char> seen(n + 1, 0);
    int total = 0;
    for (const auto& route : plan.routes)
      for (int id : route) {
        if (id < 1 || id > n || seen[id])
          throw std::invalid_argument("evaluate: plan does not partition the fires");
        seen[id] = 1;
        ++total;
      }
    if (total != n)
      throw std::invalid_argument("evaluate: plan does not partition the fires");
  }

  const double crit = critical_area(scenario.params);
  ScheduleEvaluation ev;
  ev.timings.resize(n);
  ev.per_fire_fer.resize(n, 0.0);

  for (int i = 0; i < m; ++i) {
    Vec2 pos = scenario.uavs[i].position;
    double clock = 0.0;
    for (int fire_id : plan.routes[i]) {
      const FireSpot& fire = scenario.fires[fire_id - 1];
      const double start = clock + distance(pos, fire.position) / scenario.params.uav_speed;
      const double deadline = deadline_time(fire.initial_area, scenario.params);
      const double area = grown_area(fire.initial_area, scenario.params, start);

      TaskTiming& t = ev.timings[fire_id - 1];
      t.fire_id = fire_id;
      t.uav_id = i + 1;
      t.start_time = start;
      t.deadline = deadline;
      t.area_at_start = area;
      t.feasible = start < deadline && area < crit;
      if (t.feasible) {
        t.quench_duration = quench_time(area, scenario.params);
        t.completion_time = start + t.quench_duration;
        clock = t.completion_time;
        ev.total_quench += t.quench_duration;
        if (t.completion_time > ev.makespan) ev.makespan = t.completion_time;
      } else {
        t.quench_duration = kappa;
        t.completion_time = start;
        clock = start;
        ++ev.infeasible_count;
      }
      ev.fitness += t.quench_duration;
      ev.per_fire_fer[fire_id - 1] = (area - fire.initial_area) / fire.initial_area;
      pos = fire.position;
    }
  }
  ev.infeasible_ratio = n > 0 ? static_cast<double>(ev.infeasible_count) / n : 0.0;
  return ev;
}

struct FerSummary {
  std::vector<double> per_fire;  // by fire id; peak growth relative to A0
  double mean = 0.0;             // over feasible fires
};

// The fire area peaks at mitigation start and shrinks afterwards, so the
// per-fire expansion ratio is taken there.
inline FerSummary fire_expansion_ratios(const ScheduleEvaluation& ev,
                                        const Scenario& scenario) {
  (void)scenario;
  FerSummary summary;
  summary.per_fire = ev.per_fire_fer;
  double sum = 0.0;
  int feasible = 0;
  for (const TaskTiming& t : ev.timings)
    if (t.feasible) {
      sum += ev.per_fire_fer[t.fire_id - 1];
      ++feasible;
    }
  summary.mean = feasible > 0 ? sum / feasible : 0.0;
  return summary;
}

inline bool mission_success(const ScheduleEvaluation& ev) {
  return ev.infeasible_count == 0;
}

}  // namespace firesched
