#pragma once

#include <limits>
#include <vector>

#include "firesched/chromosome.hpp"
#include "firesched/fire_model.hpp"
#include "firesched/scenario.hpp"
#include "firesched/scheduling.hpp"

namespace firesched {

namespace detail {

struct UavCursor {
  Vec2 position;
  double available = 0.0;
};

// Advance a cursor through one assignment: travel, then quench if the fire is
// still winnable on arrival, fly through otherwise.
inline void advance(UavCursor& cursor, const FireSpot& fire, const Scenario& s,
                    double crit) {
  const double start = cursor.available +
                       distance(cursor.position, fire.position) / s.params.uav_speed;
  const double deadline = deadline_time(fire.initial_area, s.params);
  const double area = grown_area(fire.initial_area, s.params, start);
  cursor.available = (start < deadline && area < crit)
                         ? start + quench_time(area, s.params)
                         : start;
  cursor.position = fire.position;
}

// encode() rejects empty routes, so donate the nearest fire from a route that
// can spare one to each idle UAV.
inline void fill_empty_routes(RoutePlan& plan, const Scenario& s) {
  for (std::size_t i = 0; i < plan.routes.size(); ++i) {
    if (!plan.routes[i].empty()) continue;
    int best_fire = -1;
    std::size_t best_donor = 0, best_pos = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d < plan.routes.size(); ++d) {
      if (plan.routes[d].size() < 2) continue;
      for (std::size_t p = 0; p < plan.routes[d].size(); ++p) {
        const int id = plan.routes[d][p];
        const double dist = distance(s.uavs[i].position, s.fires[id - 1].position);
        if (dist < best_dist || (dist == best_dist && id < best_fire)) {
          best_dist = dist;
          best_fire = id;
          best_donor = d;
          best_pos = p;
        }
      }
    }
    if (best_fire < 0) throw std::invalid_argument("baseline: cannot fill empty route");
    plan.routes[best_donor].erase(plan.routes[best_donor].begin() + best_pos);
    plan.routes[i].push_back(best_fire);
  }
}

}  // namespace detail

// Myopic reference: whichever UAV frees up first grabs the closest remaining
// fire. Fast, and exactly the strategy that loses races against distant
// large fires with short deadlines.
inline RoutePlan greedy_nearest(const Scenario& s) {
  const int n = s.fire_count();
  const int m = s.uav_count();
  const double crit = critical_area(s.params);
  std::vector<detail::UavCursor> cursors(m);
  for (int i = 0; i < m; ++i) cursors[i].position = s.uavs[i].position;

  RoutePlan plan;
  plan.routes.resize(m);
  std::vector<char> assigned(n + 1, 0);
  for (int step = 0; step < n; ++step) {
    int uav = 0;
    for (int i = 1; i < m; ++i)
      if (cursors[i].available < cursors[uav].available) uav = i;
    int fire = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int id = 1; id <= n; ++id) {
      if (assigned[id]) continue;
      const double dist = distance(cursors[uav].position, s.fires[id - 1].position);
      if (dist < best_dist) {
        best_dist = dist;
        fire = id;
      }
    }
    assigned[fire] = 1;
    plan.routes[uav].push_back(fire);
    detail::advance(cursors[uav], s.fires[fire - 1], s, crit);
  }
  detail::fill_empty_routes(plan, s);
  return plan;
}

// Deadline-driven seed: the most urgent unassigned fire goes to whichever UAV
// can start it soonest. Deadlines are static (taken at A0), which keeps the
// heuristic cheap; it only has to beat random initialization.
inline RoutePlan earliest_deadline_first(const Scenario& s) {
  const int n = s.fire_count();
  const int m = s.uav_count();
  const double crit = critical_area(s.params);
  std::vector<detail::UavCursor> cursors(m);
  for (int i = 0; i < m; ++i) cursors[i].position = s.uavs[i].position;

  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j + 1;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deadline_time(s.fires[a - 1].initial_area, s.params) <
           deadline_time(s.fires[b - 1].initial_area, s.params);
  });

  RoutePlan plan;
  plan.routes.resize(m);
  for (int fire : order) {
    int uav = 0;
    double best_start = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double start =
          cursors[i].available +
          distance(cursors[i].position, s.fires[fire - 1].position) / s.params.uav_speed;
      if (start < best_start) {
        best_start = start;
        uav = i;
      }
    }
    plan.routes[uav].push_back(fire);
    detail::advance(cursors[uav], s.fires[fire - 1], s, crit);
  }
  detail::fill_empty_routes(plan, s);
  return plan;
}

}  // namespace firesched
