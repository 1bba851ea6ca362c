#include "pepcd/spatial.hpp"

#include <cmath>

#include "pepcd/montecarlo.hpp"
#include "pepcd/mtdensity.hpp"

namespace pepcd {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

CsrTestResult csr_test(std::span<const Point2d> x, std::span<const Point2d> y, const ExpansionParameter& r,
                       EdgeKind kind, const CsrOptions& options) {
  return csr_test(delaunay(y), x, r, kind, options);
}

CsrTestResult csr_test(const Triangulation& triangulation, std::span<const Point2d> x, const ExpansionParameter& r,
                       EdgeKind kind, const CsrOptions& options) {
  if (kind == EdgeKind::Simple) throw Error(ErrorKind::InvalidArgument, "CSR test uses AND or OR edges");
  if (kind == EdgeKind::And && !r.is_infinite() && r.value() == 1.0)
    throw Error(ErrorKind::DegenerateLimit, "AND density is identically 0 at r = 1");
  if (r.is_infinite() && !options.allow_boundary_r)
    throw Error(ErrorKind::DegenerateLimit, "r = inf has no normal limit unless boundary r is allowed");

  std::vector<Point2d> kept;
  std::size_t excluded = 0;
  if (options.drop_outside) {
    HullFilter f = filter_to_hull(triangulation, x);
    kept = std::move(f.inside);
    excluded = f.outside.size();
  } else {
    kept.assign(x.begin(), x.end());
  }
  if (kept.size() < 2) throw Error(ErrorKind::TooFewVertices, "CSR test needs at least 2 points inside the hull");

  const Pcd pcd = build_pcd(triangulation, kept, r);
  const MultiDensityReport rep = multi_density(pcd, kind);
  const std::vector<double> w = triangulation.weights();
  const MultiTriangleParams null = multi_triangle_params_I(w, r, kind);

  CsrTestResult out;
  out.kind = kind;
  out.r = r;
  out.n = kept.size();
  out.m = triangulation.sites.size();
  out.triangles = triangulation.size();
  out.excluded = excluded;
  out.observed = rep.rho_I;
  out.null_mean = null.mean;
  out.null_variance = null.scaled_variance() / static_cast<double>(out.n);
  if (!(out.null_variance > 0.0))
    throw Error(ErrorKind::DegenerateLimit, "null variance vanishes for this r and triangulation");
  out.z = (out.observed - out.null_mean) / std::sqrt(out.null_variance);
  out.p_lower = normal_cdf(out.z);
  out.p_upper = normal_cdf(-out.z);
  out.p_two_sided = std::min(1.0, 2.0 * std::min(out.p_lower, out.p_upper));
  return out;
}

Scenario csr_scenario() {
  return [](const Triangulation& t, std::size_t n, RandomStream& rng) { return sample_uniform_hull(t, n, rng); };
}

namespace {

// Uniform point, then contracted toward a target inside its own triangle, so
// the result stays in that triangle.
template <typename Target>
Scenario contracted(double strength, Target target) {
  if (!(strength >= 0.0 && strength < 1.0)) throw Error(ErrorKind::InvalidArgument, "strength must lie in [0, 1)");
  return [strength, target](const Triangulation& t, std::size_t n, RandomStream& rng) {
    std::vector<Point2d> pts = sample_uniform_hull(t, n, rng);
    for (Point2d& p : pts) {
      const Triangle2d tri = t.triangle(static_cast<std::size_t>(t.locate(p)));
      const Point2d c = target(tri, rng);
      const Point2d q = c + (1.0 - strength) * (p - c);
      if (tri.contains(q)) p = q;
    }
    return pts;
  };
}

}  // namespace

Scenario segregation_scenario(double strength) {
  return contracted(strength, [](const Triangle2d& tri, RandomStream&) { return tri.centroid(); });
}

Scenario association_scenario(double strength) {
  return contracted(strength, [](const Triangle2d& tri, RandomStream& rng) {
    return Point2d(tri[static_cast<int>(rng.below(3))]);
  });
}

std::vector<PowerPoint> power_curve(const Scenario& scenario, const Triangulation& triangulation,
                                    std::span<const ExpansionParameter> r_grid, std::size_t n, std::size_t reps,
                                    EdgeKind kind, double alpha, std::uint64_t seed, unsigned threads) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0, 1)");
  if (reps == 0) throw Error(ErrorKind::InvalidArgument, "need at least one replicate");
  std::vector<PowerPoint> out;
  for (const ExpansionParameter& r : r_grid) {
    std::vector<CsrTestResult> results(reps);
    // the same draws are reused across the r grid
    parallel_for(reps, threads, [&](std::size_t k) {
      RandomStream rng(seed, k);
      const std::vector<Point2d> x = scenario(triangulation, n, rng);
      results[k] = csr_test(triangulation, x, r, kind);
    });
    PowerPoint pt;
    pt.r = r;
    pt.replicates = reps;
    for (const CsrTestResult& res : results) {
      pt.reject_two_sided += res.p_two_sided < alpha;
      pt.reject_lower += res.p_lower < alpha;
      pt.reject_upper += res.p_upper < alpha;
      pt.mean_z += res.z;
    }
    const double m = static_cast<double>(reps);
    pt.reject_two_sided /= m;
    pt.reject_lower /= m;
    pt.reject_upper /= m;
    pt.mean_z /= m;
    pt.standard_error = std::sqrt(pt.reject_two_sided * (1.0 - pt.reject_two_sided) / m);
    out.push_back(pt);
  }
  return out;
}

}  // namespace pepcd
