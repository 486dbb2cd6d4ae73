#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "firesched/geometry.hpp"

namespace firesched {

// Circular fire front. The area A of an attended fire obeys
//
//   dA/dt = phi_s * P(A) - phi_q,   P(A) = 2*sqrt(pi)*sqrt(A)
//
// with radial spread rate phi_s and single-UAV area quench rate phi_q.
// Growth stalls exactly where phi_s * P(A) = phi_q; that area is the
// critical area above which one UAV can no longer win.

struct FireParams {
  double spread_rate = 0.05;  // phi_s, m/s
  double quench_rate = 20.0;  // phi_q, m^2/s
  double uav_speed = 20.0;    // v, m/s

  friend bool operator==(const FireParams&, const FireParams&) = default;
};

struct FireSpot {
  int id = 0;                 // 1-based, contiguous within a scenario
  Vec2 position;              // m
  double initial_area = 0.0;  // m^2

  friend bool operator==(const FireSpot&, const FireSpot&) = default;
};

// Requested quench time for a fire at or past the critical area. Schedulers
// substitute the infeasibility penalty instead of propagating this.
class InfeasibleAreaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void validate(const FireParams& p) {
  if (!(p.spread_rate > 0.0) || !(p.quench_rate > 0.0) || !(p.uav_speed > 0.0))
    throw std::invalid_argument("fire params must be positive");
}

inline double perimeter(double area) {
  if (area < 0.0) throw std::domain_error("perimeter: negative area");
  return 2.0 * std::sqrt(std::numbers::pi) * std::sqrt(area);
}

// Unattended growth has d(sqrt(A))/dt = sqrt(pi)*phi_s, hence a closed form.
inline double grown_area(double initial_area, const FireParams& p, double elapsed) {
  if (initial_area < 0.0) throw std::domain_error("grown_area: negative area");
  if (elapsed < 0.0) throw std::domain_error("grown_area: negative elapsed");
  const double root = std::sqrt(initial_area) +
                      std::sqrt(std::numbers::pi) * p.spread_rate * elapsed;
  return root * root;
}

inline double critical_area(const FireParams& p) {
  const double root = p.quench_rate / (2.0 * std::sqrt(std::numbers::pi) * p.spread_rate);
  return root * root;
}

// Time until an unattended fire reaches the critical area. Negative when the
// fire is already past critical, so callers can test start < deadline
// uniformly; such a task is infeasible from t = 0.
inline double deadline_time(double initial_area, const FireParams& p) {
  if (initial_area < 0.0) throw std::domain_error("deadline_time: negative area");
  return (std::sqrt(critical_area(p)) - std::sqrt(initial_area)) /
         (p.spread_rate * std::sqrt(std::numbers::pi));
}

// Service duration that drives the area to zero while the fire keeps
// spreading under suppression. Integrating the area equation via u = sqrt(A)
// gives, with K = 2*sqrt(pi):
//
//   Q(A) = 2*phi_q/(K*phi_s)^2 * ln(phi_q / (phi_q - K*phi_s*sqrt(A)))
//          - 2*sqrt(A)/(K*phi_s)
//
// The log argument carries sqrt(A); it diverges as A approaches the critical
// area, where the front outruns the quench rate.
inline double quench_time(double area_at_start, const FireParams& p) {
  if (area_at_start < 0.0) throw std::domain_error("quench_time: negative area");
  if (area_at_start == 0.0) return 0.0;
  const double k = 2.0 * std::sqrt(std::numbers::pi) * p.spread_rate;
  const double root = std::sqrt(area_at_start);
  const double margin = p.quench_rate - k * root;
  if (margin <= 0.0)
    throw InfeasibleAreaError("quench_time: area at or past critical");
  return 2.0 * p.quench_rate / (k * k) * std::log(p.quench_rate / margin) -
         2.0 * root / k;
}

}  // namespace firesched
