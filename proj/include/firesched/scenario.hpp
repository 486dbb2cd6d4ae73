#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "firesched/fire_model.hpp"
#include "firesched/rng.hpp"

namespace firesched {

struct Uav {
  int id = 0;  // 1-based, contiguous within a scenario
  Vec2 position;

  friend bool operator==(const Uav&, const Uav&) = default;
};

struct Bounds {
  double w = 1000.0;  // m
  double h = 1000.0;  // m

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct Scenario {
  Bounds bounds;
  FireParams params;
  std::vector<Uav> uavs;
  std::vector<FireSpot> fires;

  int uav_count() const { return static_cast<int>(uavs.size()); }
  int fire_count() const { return static_cast<int>(fires.size()); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ScenarioSpec {
  Bounds bounds;
  int uav_count = 5;
  int fire_count = 15;
  double radius_min = 5.0;   // m
  double radius_max = 15.0;  // m
  FireParams params;
  std::uint64_t seed = 0;
};

inline void validate(const Scenario& s) {
  validate(s.params);
  if (!(s.bounds.w > 0.0) || !(s.bounds.h > 0.0))
    throw std::invalid_argument("scenario: bounds must be positive");
  const int m = s.uav_count();
  const int n = s.fire_count();
  if (m < 1) throw std::invalid_argument("scenario: need at least one UAV");
  if (n < m) throw std::invalid_argument("scenario: need fires >= uavs");
  const double crit = critical_area(s.params);
  for (int i = 0; i < m; ++i) {
    const Uav& u = s.uavs[i];
    if (u.id != i + 1) throw std::invalid_argument("scenario: UAV ids must be 1..m in order");
    if (u.position.x < 0.0 || u.position.x > s.bounds.w ||
        u.position.y < 0.0 || u.position.y > s.bounds.h)
      throw std::invalid_argument("scenario: UAV outside mission bounds");
  }
  for (int j = 0; j < n; ++j) {
    const FireSpot& f = s.fires[j];
    if (f.id != j + 1) throw std::invalid_argument("scenario: fire ids must be 1..n in order");
    if (f.position.x < 0.0 || f.position.x > s.bounds.w ||
        f.position.y < 0.0 || f.position.y > s.bounds.h)
      throw std::invalid_argument("scenario: fire outside mission bounds");
    if (!(f.initial_area > 0.0))
      throw std::invalid_argument("scenario: fire areas must be positive");
    if (f.initial_area >= crit)
      throw std::invalid_argument("scenario: fire already past critical area");
  }
}

inline void validate(const ScenarioSpec& spec) {
  validate(spec.params);
  if (!(spec.bounds.w > 0.0) || !(spec.bounds.h > 0.0))
    throw std::invalid_argument("scenario spec: bounds must be positive");
  if (spec.uav_count < 1) throw std::invalid_argument("scenario spec: need at least one UAV");
  if (spec.fire_count < spec.uav_count)
    throw std::invalid_argument("scenario spec: need fires >= uavs");
  if (spec.radius_min < 0.0 || spec.radius_max < spec.radius_min)
    throw std::invalid_argument("scenario spec: bad radius range");
  const double max_area = std::numbers::pi * spec.radius_max * spec.radius_max;
  if (max_area >= critical_area(spec.params))
    throw std::invalid_argument("scenario spec: radius_max reaches critical area");
}

namespace detail {

// Fire positions come from `layout_seed`, radii and UAV positions from
// `variation_seed`. Keeping the streams separate lets campaigns redraw the
// latter while the fire layout stays fixed.
inline Scenario generate_impl(const ScenarioSpec& spec, std::uint64_t layout_seed,
                              std::uint64_t variation_seed) {
  validate(spec);
  Rng pos_rng(derive_seed(layout_seed, kStreamFirePositions));
  Rng radius_rng(derive_seed(variation_seed, kStreamFireRadii));
  Rng uav_rng(derive_seed(variation_seed, kStreamUavPositions));

  Scenario s;
  s.bounds = spec.bounds;
  s.params = spec.params;
  s.fires.resize(spec.fire_count);
  for (int j = 0; j < spec.fire_count; ++j) {
    s.fires[j].id = j + 1;
    s.fires[j].position = {pos_rng.uniform(0.0, spec.bounds.w),
                           pos_rng.uniform(0.0, spec.bounds.h)};
  }
  for (int j = 0; j < spec.fire_count; ++j) {
    const double r = radius_rng.uniform(spec.radius_min, spec.radius_max);
    s.fires[j].initial_area = std::numbers::pi * r * r;
  }
  s.uavs.resize(spec.uav_count);
  for (int i = 0; i < spec.uav_count; ++i) {
    s.uavs[i].id = i + 1;
    s.uavs[i].position = {uav_rng.uniform(0.0, spec.bounds.w),
                          uav_rng.uniform(0.0, spec.bounds.h)};
  }
  validate(s);
  return s;
}

}  // namespace detail

inline Scenario generate(const ScenarioSpec& spec) {
  return detail::generate_impl(spec, spec.seed, spec.seed);
}

// Same fire layout as generate(spec), fresh radii and UAV positions.
inline Scenario generate_variation(const ScenarioSpec& spec, std::uint64_t variation_seed) {
  return detail::generate_impl(spec, spec.seed, variation_seed);
}

inline std::string save(const Scenario& s) {
  nlohmann::json doc;
  doc["bounds"] = {{"w", s.bounds.w}, {"h", s.bounds.h}};
  doc["params"] = {{"spread_rate", s.params.spread_rate},
                   {"quench_rate", s.params.quench_rate},
                   {"uav_speed", s.params.uav_speed}};
  auto& uavs = doc["uavs"] = nlohmann::json::array();
  for (const Uav& u : s.uavs)
    uavs.push_back({{"id", u.id}, {"x", u.position.x}, {"y", u.position.y}});
  auto& fires = doc["fires"] = nlohmann::json::array();
  for (const FireSpot& f : s.fires)
    fires.push_back({{"id", f.id},
                     {"x", f.position.x},
                     {"y", f.position.y},
                     {"initial_area", f.initial_area}});
  return doc.dump(2) + "\n";
}

inline Scenario load(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("scenario: not valid JSON: ") + e.what());
  }
  Scenario s;
  try {
    s.bounds.w = doc.at("bounds").at("w").get<double>();
    s.bounds.h = doc.at("bounds").at("h").get<double>();
    const auto& params = doc.at("params");
    s.params.spread_rate = params.at("spread_rate").get<double>();
    s.params.quench_rate = params.at("quench_rate").get<double>();
    s.params.uav_speed = params.at("uav_speed").get<double>();
    for (const auto& u : doc.at("uavs"))
      s.uavs.push_back({u.at("id").get<int>(),
                        {u.at("x").get<double>(), u.at("y").get<double>()}});
    for (const auto& f : doc.at("fires"))
      s.fires.push_back({f.at("id").get<int>(),
                         {f.at("x").get<double>(), f.at("y").get<double>()},
                         f.at("initial_area").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("scenario: schema violation: ") + e.what());
  }
  validate(s);
  return s;
}

}  // namespace firesched
