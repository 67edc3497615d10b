#include "chords/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace chords {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 520.0;
constexpr double kMargin = 40.0;
constexpr double kGraphHeight = 380.0;
constexpr double kBarY = 470.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double x_pixel(const Rational& x) {
  return kMargin + to_double(x) * (kWidth - 2 * kMargin);
}

}  // namespace

std::string render_plot_svg(const PLFunction& f, const IntervalSet& chords) {
  double y_min = 0.0;
  double y_max = 0.0;
  for (const Breakpoint& p : f.breakpoints()) {
    y_min = std::min(y_min, to_double(p.y));
    y_max = std::max(y_max, to_double(p.y));
  }
  if (y_max - y_min < 1e-9) y_max = y_min + 1.0;
  const double graph_top = kMargin;
  const auto y_pixel = [&](double y) {
    return graph_top + (y_max - y) / (y_max - y_min) * kGraphHeight;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << " " << fmt(kHeight) << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Zero axis.
  svg << "  <line x1=\"" << fmt(x_pixel(Rational(0))) << "\" y1=\"" << fmt(y_pixel(0.0))
      << "\" x2=\"" << fmt(x_pixel(Rational(1))) << "\" y2=\"" << fmt(y_pixel(0.0))
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  // Function graph.
  svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const Breakpoint& p : f.breakpoints()) {
    if (!first) svg << " ";
    svg << fmt(x_pixel(p.x)) << "," << fmt(y_pixel(to_double(p.y)));
    first = false;
  }
  svg << "\"/>\n";

  // Chord-set bar: baseline, solid intervals, dots for isolated points.
  svg << "  <line x1=\"" << fmt(x_pixel(Rational(0))) << "\" y1=\"" << fmt(kBarY) << "\" x2=\""
      << fmt(x_pixel(Rational(1))) << "\" y2=\"" << fmt(kBarY)
      << "\" stroke=\"#dddddd\" stroke-width=\"8\"/>\n";
  for (const Interval& iv : chords.intervals) {
    if (iv.lo == iv.hi) {
      svg << "  <circle cx=\"" << fmt(x_pixel(iv.lo)) << "\" cy=\"" << fmt(kBarY)
          << "\" r=\"5\" fill=\"#c23b22\"/>\n";
    } else {
      svg << "  <line x1=\"" << fmt(x_pixel(iv.lo)) << "\" y1=\"" << fmt(kBarY) << "\" x2=\""
          << fmt(x_pixel(iv.hi)) << "\" y2=\"" << fmt(kBarY)
          << "\" stroke=\"#c23b22\" stroke-width=\"8\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace chords
