#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "firesched/fire_model.hpp"
#include "firesched/oracle.hpp"

using namespace firesched;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const FireParams kDefault{0.05, 20.0, 20.0};
}

TEST_CASE("perimeter of a circular fire") {
  CHECK(perimeter(0.0) == 0.0);
  CHECK_THAT(perimeter(1.0 / (4.0 * std::numbers::pi)), WithinRel(1.0, 1e-12));
  // radius-10 circle: area 100*pi, perimeter 20*pi
  CHECK_THAT(perimeter(314.1593), WithinRel(62.831856535897837, 1e-12));
  CHECK_THROWS_AS(perimeter(-1.0), std::domain_error);
}

TEST_CASE("grown_area closed form") {
  CHECK_THAT(grown_area(100.0, kDefault, 0.0), WithinRel(100.0, 1e-15));
  CHECK_THAT(grown_area(100.0, kDefault, 10.0), WithinRel(118.50993667245261, 1e-12));
  CHECK_THAT(grown_area(0.0, kDefault, 100.0), WithinRel(78.539816339744831, 1e-12));
  CHECK_THROWS_AS(grown_area(100.0, kDefault, -1.0), std::domain_error);
  CHECK_THROWS_AS(grown_area(-1.0, kDefault, 1.0), std::domain_error);
}

TEST_CASE("grown_area matches RK4 integration of the growth equation") {
  // The sqrt right-hand side is degenerate at exactly zero area, so the
  // zero-start case is checked through the semigroup step from t=1.
  const OdeTrace grow = integrate_fire(100.0, kDefault, false, 1e-3, 10.0);
  CHECK_THAT(grow.terminal_area(), WithinRel(118.50993667245261, 1e-6));

  const double at_one = grown_area(0.0, kDefault, 1.0);
  const OdeTrace rest = integrate_fire(at_one, kDefault, false, 1e-3, 99.0);
  CHECK_THAT(rest.terminal_area(), WithinRel(78.539816339744831, 1e-6));
}

TEST_CASE("critical_area balances growth against the quench rate") {
  CHECK_THAT(critical_area({1.0, 2.0 * std::sqrt(std::numbers::pi), 20.0}),
             WithinRel(1.0, 1e-12));
  CHECK_THAT(critical_area(kDefault), WithinRel(12732.395447351627, 1e-12));
  // doubling the spread rate quarters the critical area
  CHECK_THAT(critical_area({0.10, 20.0, 20.0}), WithinRel(3183.0988618379067, 1e-12));
  // fixed point: at A^c the front grows exactly as fast as one UAV quenches
  const double crit = critical_area(kDefault);
  CHECK_THAT(kDefault.spread_rate * perimeter(crit),
             WithinRel(kDefault.quench_rate, 1e-12));
}

TEST_CASE("deadline_time reaches the critical area") {
  const double crit = critical_area(kDefault);
  CHECK_THAT(deadline_time(crit, kDefault), WithinAbs(0.0, 1e-9));
  CHECK_THAT(deadline_time(314.1593, kDefault), WithinRel(1073.2395337085836, 1e-12));
  // already past critical: negative, signalling infeasible from t=0
  CHECK_THAT(deadline_time(4.0 * crit, kDefault),
             WithinRel(-1273.2395447351627, 1e-12));

  const OdeTrace trace = integrate_fire(314.1593, kDefault, false, 1e-2, 5000.0);
  REQUIRE(trace.terminal_event == OdeEvent::reached_critical);
  CHECK_THAT(trace.terminal_time(), WithinAbs(1073.2395337085836, 0.1));
}

TEST_CASE("quench_time closed form against the suppression ODE") {
  CHECK(quench_time(0.0, kDefault) == 0.0);
  CHECK_THAT(quench_time(100.0, kDefault), WithinRel(5.3165472866119583, 1e-12));
  // growth during quenching only adds time over the A/phi_q floor
  CHECK(quench_time(100.0, kDefault) > 100.0 / kDefault.quench_rate);

  const OdeTrace trace = integrate_fire(100.0, kDefault, true, 1e-3, 100.0);
  REQUIRE(trace.terminal_event == OdeEvent::extinguished);
  CHECK_THAT(trace.terminal_time(), WithinRel(quench_time(100.0, kDefault), 1e-4));

  CHECK_THROWS_AS(quench_time(critical_area(kDefault), kDefault), InfeasibleAreaError);
  CHECK_THROWS_AS(quench_time(2.0 * critical_area(kDefault), kDefault),
                  InfeasibleAreaError);
  CHECK_THROWS_AS(quench_time(-1.0, kDefault), std::domain_error);
}

TEST_CASE("quench_time blows up near the critical area") {
  const double crit = critical_area(kDefault);
  CHECK_THAT(quench_time(0.99 * crit, kDefault), WithinRel(5475.9747379717130, 1e-12));
  // at 0.999*A^c the service time exceeds ten times the no-growth floor
  const double area = 0.999 * crit;
  const double q = quench_time(area, kDefault);
  CHECK(q > 10.0 * area / kDefault.quench_rate);
  const OdeTrace trace = integrate_fire(area, kDefault, true, 1e-3, 2.0 * q);
  REQUIRE(trace.terminal_event == OdeEvent::extinguished);
  CHECK_THAT(trace.terminal_time(), WithinRel(q, 1e-4));
}

TEST_CASE("quench_time is strictly increasing in the starting area") {
  const double crit = critical_area(kDefault);
  double previous = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double area = 0.95 * crit * i / 40.0;
    const double q = quench_time(area, kDefault);
    CHECK(q > previous);
    CHECK(q > area / kDefault.quench_rate);
    previous = q;
  }
}

TEST_CASE("quench_time matches RK4 on a log-spaced grid") {
  // Smaller copy of the acceptance sweep: one parameter set, coarse grid.
  const double crit = critical_area(kDefault);
  for (int i = 0; i < 8; ++i) {
    const double area = 1e-3 * crit * std::pow(0.95 * crit / (1e-3 * crit), i / 7.0);
    const double q = quench_time(area, kDefault);
    const OdeTrace trace = integrate_fire(area, kDefault, true, 1e-3, 2.0 * q + 1.0);
    REQUIRE(trace.terminal_event == OdeEvent::extinguished);
    CHECK_THAT(trace.terminal_time(), WithinRel(q, 1e-4));
  }
}

TEST_CASE("deadline_time is consistent with grown_area") {
  const double crit = critical_area(kDefault);
  for (double area : {1.0, 50.0, 314.1593, 5000.0, 0.9 * crit}) {
    CHECK_THAT(grown_area(area, kDefault, deadline_time(area, kDefault)),
               WithinRel(crit, 1e-6));
  }
}

TEST_CASE("grown_area semigroup property") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double area = rng.uniform(0.0, 5000.0);
    const double t1 = rng.uniform(0.0, 500.0);
    const double t2 = rng.uniform(0.0, 500.0);
    const double stepped = grown_area(grown_area(area, kDefault, t1), kDefault, t2);
    CHECK_THAT(stepped, WithinRel(grown_area(area, kDefault, t1 + t2), 1e-9));
  }
}

TEST_CASE("fire params validation") {
  CHECK_NOTHROW(validate(kDefault));
  CHECK_THROWS_AS(validate(FireParams{0.0, 20.0, 20.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(FireParams{0.05, -1.0, 20.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(FireParams{0.05, 20.0, 0.0}), std::invalid_argument);
}
