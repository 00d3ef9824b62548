#pragma once

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <numbers>
#include <span>
#include <sstream>
#include <string>

#include "interval_system.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

struct SvgOptions {
  double size = 640.0;
  double margin = 40.0;
};

namespace detail {

struct Point2 {
  double x;
  double y;
};

// Position t in (0,1) goes to angle 2*pi*t, measured clockwise from the top.
inline Point2 on_circle(double t, double radius, double cx, double cy) {
  const double a = 2.0 * std::numbers::pi * t - std::numbers::pi / 2.0;
  return {cx + radius * std::cos(a), cy + radius * std::sin(a)};
}

inline std::string hue_for(int color) {
  if (color <= 0) return "#808080";
  std::ostringstream os;
  os << "hsl(" << std::fmod(137.508 * (color - 1), 360.0) << ",70%,45%)";
  return os.str();
}

} // namespace detail

/// Chord diagram on the unit circle: one chord per interval, colored by
/// `final_colors` when given; pillars drawn as radial ticks.
inline std::string export_svg(const IntervalSystem& system, std::span<const int> final_colors,
                              std::span<const Pillar> pillars, const SvgOptions& opt = {}) {
  const double c = opt.size / 2.0;
  const double r = c - opt.margin;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\""
     << opt.size << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
  os << "  <circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r
     << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto a = detail::on_circle(system[i].left.value().to_double(), r, c, c);
    const auto b = detail::on_circle(system[i].right.value().to_double(), r, c, c);
    const int color = i < final_colors.size() ? final_colors[i] : 0;
    os << "  <line class=\"chord\" data-index=\"" << i << "\" data-color=\"" << color
       << "\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
       << "\" stroke=\"" << detail::hue_for(color) << "\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& p : pillars) {
    const double t = p.pos.value().to_double();
    const auto in = detail::on_circle(t, r - 12.0, c, c);
    const auto out = detail::on_circle(t, r + 12.0, c, c);
    os << "  <line class=\"pillar\" data-color=\"" << p.color << "\" x1=\"" << in.x << "\" y1=\""
       << in.y << "\" x2=\"" << out.x << "\" y2=\"" << out.y
       << "\" stroke=\"#000\" stroke-width=\"2.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace circlecolor
