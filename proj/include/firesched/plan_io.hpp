#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "firesched/chromosome.hpp"
#include "firesched/scheduling.hpp"

namespace firesched {

inline std::string save_plan(const RoutePlan& plan, const ScheduleEvaluation& ev) {
  nlohmann::json doc;
  doc["fitness"] = ev.fitness;
  doc["infeasible_count"] = ev.infeasible_count;
  doc["makespan_s"] = ev.makespan;
  doc["total_quench_s"] = ev.total_quench;
  auto& routes = doc["routes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < plan.routes.size(); ++i)
    routes.push_back({{"uav", static_cast<int>(i) + 1}, {"fires", plan.routes[i]}});
  auto& tasks = doc["tasks"] = nlohmann::json::array();
  for (const TaskTiming& t : ev.timings)
    tasks.push_back({{"fire", t.fire_id},
                     {"uav", t.uav_id},
                     {"start_s", t.start_time},
                     {"deadline_s", t.deadline},
                     {"quench_s", t.quench_duration},
                     {"completion_s", t.completion_time},
                     {"area_at_start_m2", t.area_at_start},
                     {"feasible", t.feasible}});
  return doc.dump(2) + "\n";
}

inline RoutePlan load_plan(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("plan: not valid JSON: ") + e.what());
  }
  RoutePlan plan;
  try {
    const auto& routes = doc.at("routes");
    plan.routes.resize(routes.size());
    for (const auto& route : routes) {
      const int uav = route.at("uav").get<int>();
      if (uav < 1 || static_cast<std::size_t>(uav) > plan.routes.size())
        throw std::runtime_error("plan: UAV ids must be 1..m");
      plan.routes[uav - 1] = route.at("fires").get<std::vector<int>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("plan: schema violation: ") + e.what());
  }
  return plan;
}

}  // namespace firesched
