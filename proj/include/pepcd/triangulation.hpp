#pragma once

#include <array>
#include <span>
#include <vector>

#include "pepcd/geometry.hpp"

namespace pepcd {

/// Delaunay triangulation of a planar site set.
///
/// Triangles are stored counter-clockwise with the smallest site index first,
/// and the list is sorted by sorted vertex triple. The hull lists every site
/// on the hull boundary (collinear boundary sites included) counter-clockwise.
struct Triangulation {
  std::vector<Point2d> sites;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> hull;

  std::size_t size() const { return triangles.size(); }
  Triangle2d triangle(std::size_t i) const;
  double area(std::size_t i) const;
  double hull_area() const;

  // w_i = A(T_i) / A(hull).
  std::vector<double> weights() const;

  // Lowest-index triangle whose closed region contains p, or -1.
  int locate(const Point2d& p) const;
};

/// Closed convex hull, counter-clockwise, starting at the lexicographically
/// smallest point. Sites lying on hull edges are included.
std::vector<int> convex_hull(std::span<const Point2d> points);

/// Bowyer-Watson Delaunay triangulation with exact predicates. Cocircular
/// configurations are resolved to the lexicographically smallest triangle list.
Triangulation delaunay(std::span<const Point2d> points);

}  // namespace pepcd
