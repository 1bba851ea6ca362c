#pragma once

// Exact arithmetic on floating-point expansions: a value is held as a sum of
// non-overlapping doubles ordered by increasing magnitude. Sums, differences
// and products of doubles are represented without rounding error, which is
// all the geometric predicates and breakpoint comparisons need.

#include <cmath>
#include <utility>
#include <vector>

namespace pepcd {

struct TwoTerm {
  double hi;
  double lo;
};

inline TwoTerm two_sum(double a, double b) {
  const double x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  return {x, (a - av) + (b - bv)};
}

inline TwoTerm two_product(double a, double b) {
  const double x = a * b;
  return {x, std::fma(a, b, -x)};
}

class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(double v) {
    if (v != 0.0) terms_.push_back(v);
  }

  static Expansion difference(double a, double b) { return Expansion(a) - Expansion(b); }
  static Expansion product(double a, double b) {
    const TwoTerm p = two_product(a, b);
    Expansion e;
    e.grow(p.lo);
    e.grow(p.hi);
    return e;
  }

  Expansion operator+(const Expansion& o) const {
    Expansion out = *this;
    for (double t : o.terms_) out.grow(t);
    return out;
  }

  Expansion operator-() const {
    Expansion out = *this;
    for (double& t : out.terms_) t = -t;
    return out;
  }

  Expansion operator-(const Expansion& o) const { return *this + (-o); }

  Expansion operator*(double b) const {
    Expansion out;
    for (double t : terms_) {
      const TwoTerm p = two_product(t, b);
      out.grow(p.lo);
      out.grow(p.hi);
    }
    return out;
  }

  Expansion operator*(const Expansion& o) const {
    Expansion out;
    for (double t : o.terms_) out = out + (*this * t);
    return out;
  }

  // Sign of the exact value: the largest-magnitude component dominates.
  int sign() const {
    if (terms_.empty()) return 0;
    return terms_.back() > 0.0 ? 1 : -1;
  }

  double estimate() const {
    double s = 0.0;
    for (double t : terms_) s += t;
    return s;
  }

  std::size_t size() const { return terms_.size(); }

 private:
  // Shewchuk's GROW-EXPANSION with zero elimination.
  void grow(double b) {
    if (b == 0.0) return;
    std::vector<double> out;
    out.reserve(terms_.size() + 1);
    double q = b;
    for (double e : terms_) {
      const TwoTerm s = two_sum(q, e);
      q = s.hi;
      if (s.lo != 0.0) out.push_back(s.lo);
    }
    if (q != 0.0) out.push_back(q);
    terms_ = std::move(out);
  }

  std::vector<double> terms_;
};

}  // namespace pepcd
