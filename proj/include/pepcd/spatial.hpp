#pragma once

// CSR test for X against the Delaunay triangulation of Y, with the version I
// edge density as statistic and the conditional normal null.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pepcd/asymptotics.hpp"
#include "pepcd/graphs.hpp"
#include "pepcd/random.hpp"

namespace pepcd {

struct CsrOptions {
  bool drop_outside = true;       // otherwise X outside the hull is an error
  bool allow_boundary_r = false;  // r = inf when the weights alone give a normal limit
};

struct CsrTestResult {
  EdgeKind kind = EdgeKind::And;
  ExpansionParameter r = 1.0;
  std::size_t n = 0;         // retained X points
  std::size_t m = 0;         // anchors
  std::size_t triangles = 0;
  std::size_t excluded = 0;  // X points outside the hull
  double observed = 0.0;     // rho_I
  double null_mean = 0.0;    // p * sum w^2
  double null_variance = 0.0;  // 4 nu~ / n
  double z = 0.0;
  double p_lower = 0.0;      // small under a lower-than-CSR density
  double p_upper = 0.0;
  double p_two_sided = 0.0;
};

CsrTestResult csr_test(std::span<const Point2d> x, std::span<const Point2d> y, const ExpansionParameter& r,
                       EdgeKind kind, const CsrOptions& options = {});

CsrTestResult csr_test(const Triangulation& triangulation, std::span<const Point2d> x, const ExpansionParameter& r,
                       EdgeKind kind, const CsrOptions& options = {});

double normal_cdf(double z);

/// Draws n points given the anchor triangulation.
using Scenario = std::function<std::vector<Point2d>(const Triangulation&, std::size_t, RandomStream&)>;

Scenario csr_scenario();
/// Uniform in the hull, then pulled toward the centroid of the point's triangle
/// by the factor 1 - strength.
Scenario segregation_scenario(double strength);
/// Uniform in the hull, then pulled toward a random vertex of the point's
/// triangle by the factor 1 - strength.
Scenario association_scenario(double strength);

struct PowerPoint {
  ExpansionParameter r = 1.0;
  std::size_t replicates = 0;
  double reject_two_sided = 0.0;
  double reject_lower = 0.0;
  double reject_upper = 0.0;
  double mean_z = 0.0;
  double standard_error = 0.0;  // of the two-sided rate

  friend bool operator==(const PowerPoint&, const PowerPoint&) = default;
};

/// Rejection rates at level alpha over `reps` seeded draws for every r.
std::vector<PowerPoint> power_curve(const Scenario& scenario, const Triangulation& triangulation,
                                    std::span<const ExpansionParameter> r_grid, std::size_t n, std::size_t reps,
                                    EdgeKind kind, double alpha, std::uint64_t seed, unsigned threads = 1);

}  // namespace pepcd
