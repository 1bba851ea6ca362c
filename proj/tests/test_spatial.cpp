#include <doctest.h>

#include <cmath>

#include "pepcd/asymptotics.hpp"
#include "pepcd/montecarlo.hpp"
#include "pepcd/spatial.hpp"
#include "test_util.hpp"

using namespace pepcd;

namespace {

std::vector<Point2d> grid_anchors() {
  return {Point2d(0, 0), Point2d(4, 0), Point2d(8, 0.5), Point2d(0.5, 4), Point2d(4.2, 3.8), Point2d(8, 4),
          Point2d(0, 8), Point2d(4, 8.3), Point2d(7.7, 8)};
}

}  // namespace

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(0) == 0.5);
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(-1.6448536269514722) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(normal_cdf(-40) >= 0);
}

TEST_CASE("csr test statistic and null") {
  const std::vector<Point2d> y = grid_anchors();
  const Triangulation tri = delaunay(y);
  RandomStream g(60, 0);
  std::vector<Point2d> x = sample_uniform_hull(tri, 150, g);
  x.push_back(Point2d(-5, -5));
  for (const EdgeKind kind : {EdgeKind::And, EdgeKind::Or}) {
    const CsrTestResult res = csr_test(x, y, 2.0, kind);
    CHECK(res.n == 150);
    CHECK(res.m == y.size());
    CHECK(res.excluded == 1);
    CHECK(res.triangles == tri.size());

    const std::vector<Point2d> kept(x.begin(), x.end() - 1);
    const Pcd p = build_pcd(tri, kept, 2.0);
    CHECK(res.observed == edge_density(edge_set(p.digraph, kind)));

    const std::vector<double> w = tri.weights();
    double s2 = 0, s3 = 0;
    for (double v : w) s2 += v * v, s3 += v * v * v;
    const double pk = kind == EdgeKind::And ? mean_and(2.0) : mean_or(2.0);
    const double nu = kind == EdgeKind::And ? cov_kernel_and(2.0) : cov_kernel_or(2.0);
    CHECK(res.null_mean == doctest::Approx(pk * s2).epsilon(1e-12));
    CHECK(res.null_variance == doctest::Approx(4 * (nu * s3 + pk * pk * (s3 - s2 * s2)) / 150).epsilon(1e-12));
    CHECK(res.z == doctest::Approx((res.observed - res.null_mean) / std::sqrt(res.null_variance)));
    CHECK(res.p_lower == doctest::Approx(normal_cdf(res.z)));
    CHECK(res.p_upper == doctest::Approx(1 - normal_cdf(res.z)));
    CHECK(res.p_two_sided == doctest::Approx(2 * std::min(res.p_lower, res.p_upper)));
    CHECK(res.p_two_sided <= 1.0);
  }

  CsrOptions strict;
  strict.drop_outside = false;
  try {
    csr_test(x, y, 2.0, EdgeKind::And, strict);
    FAIL("outside point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutsideDomain);
    CHECK(e.index() == std::optional<std::size_t>(150));
  }
}

TEST_CASE("csr test refuses degenerate limits") {
  const std::vector<Point2d> y = grid_anchors();
  RandomStream g(61, 0);
  const std::vector<Point2d> x = sample_uniform_hull(delaunay(y), 100, g);
  auto kind_of = [&](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;  // sentinel: nothing thrown
  };
  CHECK(kind_of([&] { csr_test(x, y, 1.0, EdgeKind::And); }) == ErrorKind::DegenerateLimit);
  CsrOptions allow;
  allow.allow_boundary_r = true;
  CHECK(kind_of([&] { csr_test(x, y, 1.0, EdgeKind::And, allow); }) == ErrorKind::DegenerateLimit);
  CHECK(kind_of([&] { csr_test(x, y, ExpansionParameter::infinity(), EdgeKind::Or); }) == ErrorKind::DegenerateLimit);
  // OR at r = 1 has p > 0 and a proper limit
  CHECK(kind_of([&] { csr_test(x, y, 1.0, EdgeKind::Or); }) == ErrorKind::Io);

  // at r = inf the density is sum n_i(n_i-1) / (n(n-1)), centred on sum w^2
  const CsrTestResult inf = csr_test(x, y, ExpansionParameter::infinity(), EdgeKind::And, allow);
  const std::vector<double> w = delaunay(y).weights();
  double s2 = 0;
  for (double v : w) s2 += v * v;
  CHECK(inf.null_mean == doctest::Approx(s2));
  CHECK(std::isfinite(inf.z));

  // one triangle at r = inf has zero null variance
  const std::vector<Point2d> three = {Point2d(0, 0), Point2d(1, 0), Point2d(0, 1)};
  RandomStream h(62, 0);
  const std::vector<Point2d> xt = sample_uniform_hull(delaunay(three), 20, h);
  CHECK(kind_of([&] { csr_test(xt, three, ExpansionParameter::infinity(), EdgeKind::And, allow); }) ==
        ErrorKind::DegenerateLimit);

  const std::vector<Point2d> few = {x[0]};
  CHECK(kind_of([&] { csr_test(few, y, 2.0, EdgeKind::And); }) == ErrorKind::TooFewVertices);
}

TEST_CASE("scenarios stay inside the hull") {
  const Triangulation tri = delaunay(grid_anchors());
  RandomStream g(63, 0);
  for (const Scenario& s : {csr_scenario(), segregation_scenario(0.5), association_scenario(0.8)}) {
    const std::vector<Point2d> pts = s(tri, 500, g);
    CHECK(pts.size() == 500);
    for (const Point2d& p : pts) CHECK(tri.locate(p) >= 0);
  }
  CHECK_THROWS_AS(segregation_scenario(1.0), Error);
  CHECK_THROWS_AS(association_scenario(-0.1), Error);

  // segregation keeps points away from the anchors
  RandomStream h(64, 0);
  auto min_b = [&](const Scenario& s) {
    double lo = 1;
    for (const Point2d& p : s(tri, 2000, h)) {
      const Barycentric<double> b = barycentric(tri.triangle(static_cast<std::size_t>(tri.locate(p))), p);
      lo = std::min(lo, b.maxCoeff());
    }
    return lo;
  };
  CHECK(min_b(segregation_scenario(0.0)) >= 1.0 / 3 - 1e-12);
}

TEST_CASE("power curve is reproducible") {
  const Triangulation tri = delaunay(grid_anchors());
  const std::vector<ExpansionParameter> rs = {1.5, 2.0};
  const std::vector<PowerPoint> a = power_curve(csr_scenario(), tri, rs, 60, 40, EdgeKind::Or, 0.05, 3, 1);
  const std::vector<PowerPoint> b = power_curve(csr_scenario(), tri, rs, 60, 40, EdgeKind::Or, 0.05, 3, 4);
  CHECK(a == b);
  REQUIRE(a.size() == 2);
  for (const PowerPoint& p : a) {
    CHECK(p.replicates == 40);
    CHECK(p.reject_two_sided >= 0);
    CHECK(p.reject_two_sided <= 1);
    CHECK(p.standard_error == doctest::Approx(std::sqrt(p.reject_two_sided * (1 - p.reject_two_sided) / 40)));
  }
}
