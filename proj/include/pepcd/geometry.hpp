#pragma once

// Planar primitives: points, triangles, barycentric coordinates and the
// affine map that carries any triangle onto the standard equilateral one.
//
// Types are templated on the scalar so that the same code serves the double
// fast path and high-precision reference evaluations in tests.

#include <array>
#include <cmath>
#include <type_traits>

#include <Eigen/Core>
#include <Eigen/LU>

#include "pepcd/error.hpp"
#include "pepcd/predicates.hpp"

namespace pepcd {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
using Point2d = Point2<double>;

// (b1, b2, b3) with b1 + b2 + b3 = 1.
template <typename Scalar>
using Barycentric = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
inline Scalar cross(const Point2<Scalar>& u, const Point2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

// Sign of orientation; exact for double, plain arithmetic otherwise.
template <typename Scalar>
int orientation(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return predicates::orient2d(a, b, c);
  } else {
    const Scalar d = cross<Scalar>(b - a, c - a);
    return (d > Scalar(0)) - (d < Scalar(0));
  }
}

/// A non-degenerate triangle with counter-clockwise vertices (y1, y2, y3).
/// Clockwise input is normalized by swapping y2 and y3.
template <typename Scalar>
class Triangle {
 public:
  using Point = Point2<Scalar>;

  Triangle(const Point& y1, const Point& y2, const Point& y3) : v_{y1, y2, y3} {
    const int o = orientation<Scalar>(y1, y2, y3);
    if (o == 0) throw Error(ErrorKind::DegenerateInput, "triangle vertices are collinear");
    if (o < 0) std::swap(v_[1], v_[2]);
  }

  /// T_e: vertices (0,0), (1,0), (1/2, sqrt(3)/2).
  static Triangle equilateral() {
    using std::sqrt;
    return Triangle(Point(Scalar(0), Scalar(0)), Point(Scalar(1), Scalar(0)),
                    Point(Scalar(1) / Scalar(2), sqrt(Scalar(3)) / Scalar(2)));
  }

  const Point& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const Point& operator[](int i) const { return vertex(i); }

  Scalar doubled_area() const { return cross<Scalar>(v_[1] - v_[0], v_[2] - v_[0]); }
  Scalar area() const { return doubled_area() / Scalar(2); }

  Point centroid() const { return (v_[0] + v_[1] + v_[2]) / Scalar(3); }

  // Midpoint of the edge opposite y_i.
  Point edge_midpoint(int i) const {
    return (vertex((i + 1) % 3) + vertex((i + 2) % 3)) / Scalar(2);
  }

  // Closed containment. Exact for double.
  bool contains(const Point& p) const {
    return orientation<Scalar>(v_[0], v_[1], p) >= 0 && orientation<Scalar>(v_[1], v_[2], p) >= 0 &&
           orientation<Scalar>(v_[2], v_[0], p) >= 0;
  }

  // Index of the vertex equal to p, or -1.
  int vertex_index(const Point& p) const {
    for (int i = 0; i < 3; ++i)
      if (v_[static_cast<std::size_t>(i)] == p) return i;
    return -1;
  }

 private:
  std::array<Point, 3> v_;
};

using Triangle2d = Triangle<double>;

/// Barycentric coordinates of p with respect to tri. Vertices map exactly to
/// unit vectors.
template <typename Scalar>
Barycentric<Scalar> barycentric(const Triangle<Scalar>& tri, const Point2<Scalar>& p) {
  const Point2<Scalar> e2 = tri[1] - tri[0];
  const Point2<Scalar> e3 = tri[2] - tri[0];
  const Point2<Scalar> d = p - tri[0];
  const Scalar det = cross<Scalar>(e2, e3);
  const Scalar b2 = cross<Scalar>(d, e3) / det;
  const Scalar b3 = cross<Scalar>(e2, d) / det;
  return Barycentric<Scalar>(Scalar(1) - b2 - b3, b2, b3);
}

template <typename Scalar>
Point2<Scalar> from_barycentric(const Triangle<Scalar>& tri, const Barycentric<Scalar>& b) {
  return b(0) * tri[0] + b(1) * tri[1] + b(2) * tri[2];
}

/// x -> linear * x + shift.
template <typename Scalar>
class AffineMap {
 public:
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;
  using Point = Point2<Scalar>;

  AffineMap() : linear_(Matrix::Identity()), shift_(Point::Zero()) {}
  AffineMap(const Matrix& linear, const Point& shift) : linear_(linear), shift_(shift) {
    if (linear_.determinant() == Scalar(0))
      throw Error(ErrorKind::InvalidArgument, "affine map is not invertible");
  }

  const Matrix& linear() const { return linear_; }
  const Point& shift() const { return shift_; }
  Scalar determinant() const { return linear_.determinant(); }

  Point operator()(const Point& p) const { return linear_ * p + shift_; }

  Triangle<Scalar> operator()(const Triangle<Scalar>& t) const {
    return Triangle<Scalar>((*this)(t[0]), (*this)(t[1]), (*this)(t[2]));
  }

  // (f * g)(x) = f(g(x))
  AffineMap operator*(const AffineMap& g) const {
    return AffineMap(linear_ * g.linear_, linear_ * g.shift_ + shift_);
  }

  AffineMap inverse() const {
    const Matrix inv = linear_.inverse();
    return AffineMap(inv, -(inv * shift_));
  }

 private:
  Matrix linear_;
  Point shift_;
};

using AffineMap2d = AffineMap<double>;

/// Affine map sending y1 -> (0,0), y2 -> (1,0), y3 -> (1/2, sqrt(3)/2).
/// Triangles are stored counter-clockwise, so the map never reflects.
template <typename Scalar>
AffineMap<Scalar> standardize_map(const Triangle<Scalar>& tri) {
  using Matrix = typename AffineMap<Scalar>::Matrix;
  const Triangle<Scalar> te = Triangle<Scalar>::equilateral();
  Matrix src, dst;
  src.col(0) = tri[1] - tri[0];
  src.col(1) = tri[2] - tri[0];
  dst.col(0) = te[1] - te[0];
  dst.col(1) = te[2] - te[0];
  const Matrix linear = dst * src.inverse();
  return AffineMap<Scalar>(linear, te[0] - linear * tri[0]);
}

}  // namespace pepcd
