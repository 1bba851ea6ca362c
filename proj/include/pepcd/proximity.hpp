#pragma once

// Proportional-edge proximity regions N^r(x), their Gamma1 duals, and the
// center-of-mass vertex regions, as membership predicates on a triangle.

#include <limits>
#include <string>
#include <vector>

#include "pepcd/geometry.hpp"

namespace pepcd {

/// Expansion parameter r in [1, inf].
class ExpansionParameter {
 public:
  ExpansionParameter(double r) : value_(r) {  // NOLINT(google-explicit-constructor)
    if (!(r >= 1.0)) throw Error(ErrorKind::DomainError, "expansion parameter must satisfy r >= 1");
  }
  static ExpansionParameter infinity() { return ExpansionParameter(std::numeric_limits<double>::infinity()); }

  // Accepts a decimal number or "inf".
  static ExpansionParameter parse(const std::string& text);

  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  double value() const { return value_; }
  std::string str() const;

  friend bool operator==(const ExpansionParameter&, const ExpansionParameter&) = default;

 private:
  double value_;
};

/// Vertex region index in {0, 1, 2} (y1, y2, y3).
///
/// The segments from the center of mass to the edge midpoints lie on the
/// medians, so R(y_i) is the cell where b_i is the largest coordinate. Ties go
/// to the smallest index.
template <typename Scalar>
int vertex_region_of(const Barycentric<Scalar>& b) {
  int v = 0;
  if (b(1) > b(v)) v = 1;
  if (b(2) > b(v)) v = 2;
  return v;
}

namespace detail {

template <typename Scalar>
void require_inside(const Triangle<Scalar>& tri, const Point2<Scalar>& p, const char* what) {
  if (!tri.contains(p)) throw Error(ErrorKind::OutsideDomain, std::string(what) + " lies outside the triangle");
}

}  // namespace detail

/// Arc test on precomputed coordinates: z in N^r(x) iff
/// 1 - b_v(z) <= r (1 - b_v(x)) with v = v(x). A vertex x catches only itself,
/// which callers signal with x_vertex >= 0.
template <typename Scalar>
bool catches(const Barycentric<Scalar>& bx, int vx, int x_vertex, const Barycentric<Scalar>& bz, int z_vertex,
             const ExpansionParameter& r) {
  if (x_vertex >= 0) return z_vertex == x_vertex;
  if (r.is_infinite()) return true;
  return Scalar(1) - bz(vx) <= Scalar(r.value()) * (Scalar(1) - bx(vx));
}

template <typename Scalar>
int vertex_region(const Triangle<Scalar>& tri, const Point2<Scalar>& x) {
  detail::require_inside(tri, x, "x");
  return vertex_region_of(barycentric(tri, x));
}

template <typename Scalar>
bool in_proximity_region(const Triangle<Scalar>& tri, const ExpansionParameter& r, const Point2<Scalar>& x,
                         const Point2<Scalar>& z) {
  detail::require_inside(tri, x, "x");
  detail::require_inside(tri, z, "z");
  const Barycentric<Scalar> bx = barycentric(tri, x);
  return catches(bx, vertex_region_of(bx), tri.vertex_index(x), barycentric(tri, z), tri.vertex_index(z), r);
}

/// z in Gamma1^r(x)  <=>  x in N^r(z).
template <typename Scalar>
bool in_gamma1_region(const Triangle<Scalar>& tri, const ExpansionParameter& r, const Point2<Scalar>& x,
                      const Point2<Scalar>& z) {
  return in_proximity_region(tri, r, z, x);
}

template <typename Scalar>
struct ConvexPolygon {
  std::vector<Point2<Scalar>> vertices;  // counter-clockwise

  Scalar area() const {
    Scalar s(0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      s += cross<Scalar>(vertices[i], vertices[(i + 1) % vertices.size()]);
    return s / Scalar(2);
  }
};

/// N^r(x) as an explicit polygon for finite r. The region is the triangle
/// similar to tri at v(x) scaled by min(1, r * (1 - b_v(x))).
template <typename Scalar>
ConvexPolygon<Scalar> proximity_polygon(const Triangle<Scalar>& tri, double r, const Point2<Scalar>& x) {
  if (!(r >= 1.0) || r == std::numeric_limits<double>::infinity())
    throw Error(ErrorKind::DomainError, "proximity_polygon needs finite r >= 1");
  detail::require_inside(tri, x, "x");
  if (tri.vertex_index(x) >= 0) throw Error(ErrorKind::DegeneratePoint, "x is a triangle vertex");
  const Barycentric<Scalar> b = barycentric(tri, x);
  const int v = vertex_region_of(b);
  using std::min;
  const Scalar scale = min(Scalar(1), Scalar(r) * (Scalar(1) - b(v)));
  const Point2<Scalar>& apex = tri[v];
  ConvexPolygon<Scalar> poly;
  poly.vertices = {apex, apex + scale * (tri[(v + 1) % 3] - apex), apex + scale * (tri[(v + 2) % 3] - apex)};
  return poly;
}

}  // namespace pepcd
