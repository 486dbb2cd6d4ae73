#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "firesched/scenario.hpp"

using namespace firesched;

TEST_CASE("generate draws fires and UAVs inside the bounds") {
  ScenarioSpec spec;
  spec.seed = 42;
  const Scenario s = generate(spec);
  REQUIRE(s.fire_count() == 15);
  REQUIRE(s.uav_count() == 5);
  const double lo = std::numbers::pi * 5.0 * 5.0;
  const double hi = std::numbers::pi * 15.0 * 15.0;
  for (const FireSpot& f : s.fires) {
    CHECK(f.position.x >= 0.0);
    CHECK(f.position.x <= 1000.0);
    CHECK(f.position.y >= 0.0);
    CHECK(f.position.y <= 1000.0);
    CHECK(f.initial_area >= lo);
    CHECK(f.initial_area <= hi);
    CHECK(deadline_time(f.initial_area, s.params) > 0.0);
  }
  for (const Uav& u : s.uavs) {
    CHECK(u.position.x >= 0.0);
    CHECK(u.position.x <= 1000.0);
    CHECK(u.position.y >= 0.0);
    CHECK(u.position.y <= 1000.0);
  }
}

TEST_CASE("generation is a pure function of the spec") {
  ScenarioSpec spec;
  spec.seed = 42;
  CHECK(generate(spec) == generate(spec));
  ScenarioSpec other = spec;
  other.seed = 43;
  CHECK(!(generate(spec) == generate(other)));
}

TEST_CASE("variations keep the fire layout but redraw the rest") {
  ScenarioSpec spec;
  spec.seed = 9;
  const Scenario base = generate(spec);
  const Scenario varied = generate_variation(spec, 1234);
  REQUIRE(varied.fire_count() == base.fire_count());
  bool any_radius_changed = false;
  for (int j = 0; j < base.fire_count(); ++j) {
    CHECK(varied.fires[j].position == base.fires[j].position);
    any_radius_changed |= varied.fires[j].initial_area != base.fires[j].initial_area;
  }
  CHECK(any_radius_changed);
  CHECK(varied.uavs != base.uavs);
  CHECK(generate_variation(spec, 1234) == varied);
}

TEST_CASE("spec validation rejects radii past the critical area") {
  ScenarioSpec spec;
  spec.radius_max = 70.0;  // pi*70^2 = 15394 m^2 > A^c = 12732 m^2
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);

  ScenarioSpec inverted;
  inverted.radius_min = 10.0;
  inverted.radius_max = 5.0;
  CHECK_THROWS_AS(generate(inverted), std::invalid_argument);

  ScenarioSpec too_few;
  too_few.uav_count = 6;
  too_few.fire_count = 5;
  CHECK_THROWS_AS(generate(too_few), std::invalid_argument);
}

TEST_CASE("save/load round trip is exact") {
  ScenarioSpec spec;
  spec.seed = 77;
  const Scenario s = generate(spec);
  CHECK(load(save(s)) == s);
  // serialization itself is deterministic
  CHECK(save(s) == save(s));
}

TEST_CASE("load rejects malformed documents") {
  ScenarioSpec spec;
  spec.seed = 5;
  const Scenario s = generate(spec);

  SECTION("not JSON") { CHECK_THROWS_AS(load("not json"), std::runtime_error); }
  SECTION("missing params") {
    nlohmann::json doc = nlohmann::json::parse(save(s));
    doc.erase("params");
    CHECK_THROWS_AS(load(doc.dump()), std::runtime_error);
  }
  SECTION("fewer fires than UAVs") {
    nlohmann::json doc = nlohmann::json::parse(save(s));
    auto fires = doc["fires"];
    doc["fires"] = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) doc["fires"].push_back(fires[j]);
    CHECK_THROWS_AS(load(doc.dump()), std::invalid_argument);
  }
  SECTION("fire outside bounds") {
    nlohmann::json doc = nlohmann::json::parse(save(s));
    doc["fires"][0]["x"] = 5000.0;
    CHECK_THROWS_AS(load(doc.dump()), std::invalid_argument);
  }
  SECTION("fire past critical area") {
    nlohmann::json doc = nlohmann::json::parse(save(s));
    doc["fires"][0]["initial_area"] = 13000.0;
    CHECK_THROWS_AS(load(doc.dump()), std::invalid_argument);
  }
  SECTION("non-contiguous ids") {
    nlohmann::json doc = nlohmann::json::parse(save(s));
    doc["fires"][0]["id"] = 99;
    CHECK_THROWS_AS(load(doc.dump()), std::invalid_argument);
  }
}
