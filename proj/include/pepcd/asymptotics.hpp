#pragma once

// Closed-form asymptotics of the AND/OR edge densities of the PE-PCD under
// uniform data: edge probabilities p(r), kernel variances Var[h12] and
// covariances nu(r) = Cov[h12, h13], finite-sample variances, normal limits
// and the multi-triangle adjustments.
//
// cov_kernel_* returns nu itself; the variance of sqrt(n) * rho tends to 4 nu.

#include <cstddef>
#include <span>
#include <vector>

#include "pepcd/kinds.hpp"
#include "pepcd/piecewise_rational.hpp"
#include "pepcd/proximity.hpp"

namespace pepcd {

namespace tables {

// Pieces on [1,4/3), [4/3,3/2), [3/2,2), [2,inf).
const PiecewiseRational& edge_probability_and();
const PiecewiseRational& edge_probability_or();
const PiecewiseRational& kernel_variance_and();
const PiecewiseRational& kernel_variance_or();

// Eleven pieces split at 2/sqrt3, 6/5, sqrt5-1, (6+2sqrt2)/7, 4/3,
// (6+sqrt15)/7, 3/2, (1+sqrt5)/2, 1+1/sqrt2, 2.
const PiecewiseRational& kernel_covariance_and();
const PiecewiseRational& kernel_covariance_or();

}  // namespace tables

double mean_and(const ExpansionParameter& r);
double mean_or(const ExpansionParameter& r);
double var_kernel_and(const ExpansionParameter& r);
double var_kernel_or(const ExpansionParameter& r);
double cov_kernel_and(const ExpansionParameter& r);
double cov_kernel_or(const ExpansionParameter& r);

// Dispatch on kind; Simple is rejected with InvalidArgument.
double edge_probability(EdgeKind kind, const ExpansionParameter& r);
double kernel_variance(EdgeKind kind, const ExpansionParameter& r);
double kernel_covariance(EdgeKind kind, const ExpansionParameter& r);

/// Var[rho_n] = 2/(n(n-1)) Var[h12] + 4(n-2)/(n(n-1)) nu.
double finite_sample_variance(std::size_t n, const ExpansionParameter& r, EdgeKind kind);

struct AsymptoticParams {
  EdgeKind kind;
  ExpansionParameter r;
  std::size_t n;
  double mean;
  double scaled_variance;  // 4 nu, the limit variance of sqrt(n) (rho - mean)

  double variance() const { return scaled_variance / static_cast<double>(n); }
};

/// rho_n ~ N(p, 4 nu / n). AND at r in {1, inf} and OR at r = inf have a
/// degenerate limit and raise DegenerateLimit.
AsymptoticParams normal_params(std::size_t n, const ExpansionParameter& r, EdgeKind kind);

struct MultiTriangleParams {
  EdgeKind kind;
  ExpansionParameter r;
  std::vector<double> weights;
  double sum_w2;
  double sum_w3;
  double p;     // single-triangle p(r)
  double nu;    // single-triangle nu(r)
  double mean;  // mean of the version I or II density
  double cov;   // limit covariance; sqrt(n)(rho - mean) -> N(0, 4 cov)

  double scaled_variance() const { return 4.0 * cov; }
};

/// Version I (all pairs): mean p * sum w^2, cov nu * sum w^3 + p^2 (sum w^3 - (sum w^2)^2).
MultiTriangleParams multi_triangle_params_I(std::span<const double> weights, const ExpansionParameter& r,
                                            EdgeKind kind);

/// Version II (within-triangle pairs): mean p, cov nu * sum w^3 / (sum w^2)^2.
MultiTriangleParams multi_triangle_params_II(std::span<const double> weights, const ExpansionParameter& r,
                                             EdgeKind kind);

}  // namespace pepcd
