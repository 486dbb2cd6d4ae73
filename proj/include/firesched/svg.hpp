#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "firesched/chromosome.hpp"
#include "firesched/scenario.hpp"

namespace firesched {

namespace detail {

inline void append_fmt(std::string& out, const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  out += buf;
}

inline const char* route_color(std::size_t i) {
  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd", "#8c564b", "#e377c2",
                                            "#17becf", "#bcbd22"};
  return palette[i % (sizeof palette / sizeof palette[0])];
}

}  // namespace detail

// Static route picture: mission rectangle, fires as circles at their initial
// radius (exaggerated by fire_radius_scale so metre-scale fronts stay visible
// at kilometre scale), UAV start markers, and one polyline per route with
// visit-order labels. Output is byte-stable for identical inputs; y grows
// upward as on a map.
inline std::string plot_svg(const RoutePlan& plan, const Scenario& s,
                            double fire_radius_scale = 3.0) {
  const double w = s.bounds.w;
  const double h = s.bounds.h;
  const double margin = 0.04 * std::max(w, h);
  const auto flip = [&](double y) { return h - y; };

  std::string svg;
  detail::append_fmt(svg,
                     "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                     "viewBox=\"%.2f %.2f %.2f %.2f\">\n",
                     -margin, -margin, w + 2 * margin, h + 2 * margin);
  detail::append_fmt(svg,
                     "<rect x=\"0\" y=\"0\" width=\"%.2f\" height=\"%.2f\" "
                     "fill=\"#fffef8\" stroke=\"#333333\" stroke-width=\"%.2f\"/>\n",
                     w, h, 0.002 * std::max(w, h));

  for (const FireSpot& f : s.fires) {
    const double r = std::sqrt(f.initial_area / std::numbers::pi) * fire_radius_scale;
    detail::append_fmt(svg,
                       "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"#ff8c00\" "
                       "fill-opacity=\"0.55\" stroke=\"#cc3300\" stroke-width=\"%.2f\"/>\n",
                       f.position.x, flip(f.position.y), r, 0.0015 * std::max(w, h));
  }

  for (std::size_t i = 0; i < plan.routes.size(); ++i) {
    const char* color = detail::route_color(i);
    const Vec2 start = s.uavs[i].position;
    if (!plan.routes[i].empty()) {
      std::string points;
      detail::append_fmt(points, "%.2f,%.2f", start.x, flip(start.y));
      for (int id : plan.routes[i]) {
        const Vec2 p = s.fires[id - 1].position;
        detail::append_fmt(points, " %.2f,%.2f", p.x, flip(p.y));
      }
      detail::append_fmt(svg,
                         "<polyline points=\"%s\" fill=\"none\" stroke=\"%s\" "
                         "stroke-width=\"%.2f\"/>\n",
                         points.c_str(), color, 0.0025 * std::max(w, h));
    }
    const double box = 0.012 * std::max(w, h);
    detail::append_fmt(svg,
                       "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                       "fill=\"%s\" stroke=\"#000000\" stroke-width=\"%.2f\"/>\n",
                       start.x - box / 2, flip(start.y) - box / 2, box, box, color,
                       0.001 * std::max(w, h));
    detail::append_fmt(svg,
                       "<text x=\"%.2f\" y=\"%.2f\" font-size=\"%.2f\" "
                       "fill=\"#000000\">U%zu</text>\n",
                       start.x + box, flip(start.y) - box / 2, 0.02 * std::max(w, h),
                       i + 1);
    for (std::size_t l = 0; l < plan.routes[i].size(); ++l) {
      const Vec2 p = s.fires[plan.routes[i][l] - 1].position;
      detail::append_fmt(svg,
                         "<text x=\"%.2f\" y=\"%.2f\" font-size=\"%.2f\" "
                         "fill=\"%s\">%zu</text>\n",
                         p.x + 0.008 * std::max(w, h), flip(p.y) - 0.008 * std::max(w, h),
                         0.018 * std::max(w, h), color, l + 1);
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace firesched
