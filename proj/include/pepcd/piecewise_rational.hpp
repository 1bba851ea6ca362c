#pragma once

// Interval-partitioned rational functions with exact integer coefficients.
//
// Each piece is c * prod(P_k^e_k) / prod(Q_k^f_k) with small integer
// polynomials kept in factored form. The double path evaluates every factor
// with compensated Horner, which behaves as if the polynomial were evaluated
// in twice the working precision; the generic path serves high-precision
// reference scalars in tests.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pepcd/error.hpp"
#include "pepcd/expansion.hpp"

namespace pepcd {

/// Integer polynomial, coefficients in ascending powers.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  IntPolynomial(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  template <typename Scalar>
  Scalar evaluate(const Scalar& x) const {
    Scalar s(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + Scalar(*it);
    return s;
  }

  // Compensated Horner (Graillat, Langlois, Louvet). Coefficients are
  // integers below 2^53, hence exact doubles.
  double evaluate_compensated(double x) const {
    double s = 0.0, c = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      const TwoTerm p = two_product(s, x);
      const TwoTerm t = two_sum(p.hi, static_cast<double>(*it));
      s = t.hi;
      c = c * x + (p.lo + t.lo);
    }
    return s + c;
  }
};

struct PolynomialPower {
  IntPolynomial poly;
  int power;
};

/// c_num/c_den * prod(numerator) / prod(denominator).
struct RationalPiece {
  std::int64_t scale_num;
  std::int64_t scale_den;
  std::vector<PolynomialPower> numerator;
  std::vector<PolynomialPower> denominator;

  template <typename Scalar>
  Scalar evaluate(const Scalar& x) const {
    Scalar num = Scalar(scale_num), den = Scalar(scale_den);
    for (const auto& f : numerator) num *= ipow(f.poly.evaluate(x), f.power);
    for (const auto& f : denominator) den *= ipow(f.poly.evaluate(x), f.power);
    return num / den;
  }

  double evaluate_compensated(double x) const {
    double num = static_cast<double>(scale_num), den = static_cast<double>(scale_den);
    for (const auto& f : numerator) num *= ipow(f.poly.evaluate_compensated(x), f.power);
    for (const auto& f : denominator) den *= ipow(f.poly.evaluate_compensated(x), f.power);
    return num / den;
  }

 private:
  template <typename Scalar>
  static Scalar ipow(const Scalar& v, int e) {
    Scalar out(1);
    for (int i = 0; i < e; ++i) out *= v;
    return out;
  }
};

/// Quadratic surd (p + q sqrt(d)) / s with s > 0 and d >= 1.
struct SurdBreakpoint {
  std::int64_t p, q, d, s;

  double value() const {
    return (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(static_cast<double>(d))) /
           static_cast<double>(s);
  }

  // Exact sign of x - value().
  int compare(double x) const {
    // t = x*s - p, exactly
    const Expansion t = Expansion::product(x, static_cast<double>(s)) - Expansion(static_cast<double>(p));
    const int st = t.sign();
    const std::int64_t root = isqrt(d);
    if (q == 0 || root * root == d) {
      const Expansion u = t - Expansion(static_cast<double>(q * root));
      return u.sign();
    }
    // compare t against u = q sqrt(d), irrational
    if (st >= 0 && q < 0) return 1;
    if (st <= 0 && q > 0) return -1;
    const Expansion diff = t * t - Expansion(static_cast<double>(q * q * d));
    return st > 0 ? diff.sign() : -diff.sign();
  }

 private:
  static std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }
};

/// Piecewise rational on [starts[0], inf). Piece i covers [starts[i], starts[i+1]).
class PiecewiseRational {
 public:
  PiecewiseRational(std::vector<SurdBreakpoint> starts, std::vector<RationalPiece> pieces)
      : starts_(std::move(starts)), pieces_(std::move(pieces)) {
    if (starts_.empty() || starts_.size() != pieces_.size())
      throw Error(ErrorKind::InvalidArgument, "piece count must match breakpoint count");
  }

  std::size_t size() const { return pieces_.size(); }
  const SurdBreakpoint& start(std::size_t i) const { return starts_[i]; }
  const RationalPiece& piece(std::size_t i) const { return pieces_[i]; }

  // Exact interval lookup; x below the domain throws.
  std::size_t piece_index(double x) const {
    if (std::isnan(x) || starts_.front().compare(x) < 0)
      throw Error(ErrorKind::DomainError, "argument below the domain of the piecewise function");
    std::size_t i = 0;
    while (i + 1 < starts_.size() && starts_[i + 1].compare(x) >= 0) ++i;
    return i;
  }

  double operator()(double x) const { return pieces_[piece_index(x)].evaluate_compensated(x); }

  template <typename Scalar>
  Scalar evaluate(std::size_t piece, const Scalar& x) const {
    return pieces_[piece].evaluate(x);
  }

 private:
  std::vector<SurdBreakpoint> starts_;
  std::vector<RationalPiece> pieces_;
};

}  // namespace pepcd
