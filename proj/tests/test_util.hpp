#pragma once

#include <cmath>
#include <vector>

#include "pepcd/geometry.hpp"
#include "pepcd/random.hpp"

namespace testutil {

using pepcd::Point2d;
using pepcd::RandomStream;
using pepcd::Triangle2d;

inline Point2d random_point(RandomStream& g, double lo = -10, double hi = 10) {
  return {lo + (hi - lo) * g.uniform(), lo + (hi - lo) * g.uniform()};
}

inline std::vector<Point2d> random_points(RandomStream& g, std::size_t n, double lo = 0, double hi = 1) {
  std::vector<Point2d> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(g, lo, hi));
  return pts;
}

// Triangle with area bounded away from zero.
inline Triangle2d random_triangle(RandomStream& g) {
  for (;;) {
    const Point2d a = random_point(g), b = random_point(g), c = random_point(g);
    const double area = std::abs(pepcd::cross<double>(b - a, c - a)) / 2;
    if (area > 1.0) return Triangle2d(a, b, c);
  }
}

// Uniform point by rejection from the bounding box: deliberately not the
// square-root construction used by the library.
inline Point2d rejection_point(const Triangle2d& t, RandomStream& g) {
  const double x0 = std::min({t[0].x(), t[1].x(), t[2].x()}), x1 = std::max({t[0].x(), t[1].x(), t[2].x()});
  const double y0 = std::min({t[0].y(), t[1].y(), t[2].y()}), y1 = std::max({t[0].y(), t[1].y(), t[2].y()});
  for (;;) {
    const Point2d p(x0 + (x1 - x0) * g.uniform(), y0 + (y1 - y0) * g.uniform());
    if (t.contains(p)) return p;
  }
}

}  // namespace testutil
