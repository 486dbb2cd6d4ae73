#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "firesched/chromosome.hpp"
#include "firesched/fire_model.hpp"
#include "firesched/scenario.hpp"
#include "firesched/scheduling.hpp"

namespace firesched {

enum class OdeEvent { extinguished, reached_critical, horizon };

struct OdeTrace {
  std::vector<double> times;
  std::vector<double> areas;
  OdeEvent terminal_event = OdeEvent::horizon;

  double terminal_time() const { return times.back(); }
  double terminal_area() const { return areas.back(); }
};

// Fixed-step RK4 on dA/dt = phi_s*2*sqrt(pi)*sqrt(A) - [quench]*phi_q,
// independent of the closed forms it cross-checks. The sqrt right-hand side
// is Lipschitz away from A = 0; the extinguish crossing is located by linear
// interpolation, where the dynamics are dominated by the constant -phi_q term
// anyway. Samples are thinned to at most max_samples; the terminal point is
// always recorded exactly.
inline OdeTrace integrate_fire(double initial_area, const FireParams& p,
                               bool quench_active, double step, double horizon,
                               std::size_t max_samples = 100000) {
  if (!(step > 0.0)) throw std::invalid_argument("integrate_fire: step must be positive");
  if (initial_area < 0.0) throw std::invalid_argument("integrate_fire: negative area");

  const double crit = critical_area(p);
  const double sink = quench_active ? p.quench_rate : 0.0;
  const auto rate = [&](double area) {
    return p.spread_rate * 2.0 * std::sqrt(std::numbers::pi) *
               std::sqrt(std::max(area, 0.0)) -
           sink;
  };

  OdeTrace trace;
  const std::size_t est_steps = static_cast<std::size_t>(horizon / step) + 1;
  const std::size_t stride = std::max<std::size_t>(1, est_steps / std::max<std::size_t>(1, max_samples));
  trace.times.push_back(0.0);
  trace.areas.push_back(initial_area);

  if (quench_active && initial_area <= 0.0) {
    trace.terminal_event = OdeEvent::extinguished;
    return trace;
  }
  if (initial_area >= crit) {
    trace.terminal_event = OdeEvent::reached_critical;
    return trace;
  }

  double t = 0.0;
  double area = initial_area;
  std::size_t steps = 0;
  while (t < horizon) {
    const double dt = std::min(step, horizon - t);  // land exactly on the horizon
    if (!(dt > 0.0)) break;
    const double k1 = rate(area);
    const double k2 = rate(area + 0.5 * dt * k1);
    const double k3 = rate(area + 0.5 * dt * k2);
    const double k4 = rate(area + dt * k3);
    const double next = area + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    ++steps;

    if (next <= 0.0) {
      const double frac = area / (area - next);
      trace.times.push_back(t + frac * dt);
      trace.areas.push_back(0.0);
      trace.terminal_event = OdeEvent::extinguished;
      return trace;
    }
    if (next >= crit) {
      const double frac = (crit - area) / (next - area);
      trace.times.push_back(t + frac * dt);
      trace.areas.push_back(crit);
      trace.terminal_event = OdeEvent::reached_critical;
      return trace;
    }
    t += dt;
    area = next;
    if (steps % stride == 0) {
      trace.times.push_back(t);
      trace.areas.push_back(area);
    }
  }
  if (trace.times.back() != t) {
    trace.times.push_back(t);
    trace.areas.push_back(area);
  }
  trace.terminal_event = OdeEvent::horizon;
  return trace;
}

struct ExhaustiveResult {
  RoutePlan plan;
  double fitness = 0.0;
  int infeasible_count = 0;
  long long plans_enumerated = 0;
};

namespace detail {

// Compositions of n into m positive parts, lexicographically ascending.
inline bool next_composition(std::vector<int>& parts, int n) {
  const int m = static_cast<int>(parts.size());
  // Find the rightmost part (not the last) that can still grow.
  for (int i = m - 2; i >= 0; --i) {
    int tail = 0;
    for (int k = i + 1; k < m; ++k) tail += parts[k];
    if (tail > m - 1 - i) {  // room to reset the tail to all ones
      ++parts[i];
      int remaining = n;
      for (int k = 0; k <= i; ++k) remaining -= parts[k];
      for (int k = i + 1; k < m - 1; ++k) {
        parts[k] = 1;
        --remaining;
      }
      parts[m - 1] = remaining;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Ground truth for desk-scale instances: evaluate all n! * C(n-1, m-1)
// ordered partitions and keep the minimum-fitness plan. Permutations are
// enumerated in lexicographic order with compositions nested inside, so the
// first plan reaching the minimum is also the lexicographically smallest.
inline ExhaustiveResult exhaustive_best_plan(const Scenario& scenario, double kappa = 1e6,
                                             int max_n = 8, int max_m = 3) {
  const int n = scenario.fire_count();
  const int m = scenario.uav_count();
  if (n > max_n || m > max_m)
    throw std::invalid_argument("exhaustive_best_plan: instance too large");

  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = j + 1;

  ExhaustiveResult best;
  bool have_best = false;
  do {
    std::vector<int> parts(m, 1);
    parts[m - 1] = n - (m - 1);
    do {
      RoutePlan plan;
      plan.routes.reserve(m);
      auto cursor = perm.begin();
      for (int len : parts) {
        plan.routes.emplace_back(cursor, cursor + len);
        cursor += len;
      }
      const ScheduleEvaluation ev = evaluate(plan, scenario, kappa);
      ++best.plans_enumerated;
      if (!have_best || ev.fitness < best.fitness) {
        best.plan = std::move(plan);
        best.fitness = ev.fitness;
        best.infeasible_count = ev.infeasible_count;
        have_best = true;
      }
    } while (detail::next_composition(parts, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace firesched
