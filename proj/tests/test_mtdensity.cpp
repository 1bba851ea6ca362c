#include <doctest.h>

#include "pepcd/montecarlo.hpp"
#include "pepcd/mtdensity.hpp"
#include "test_util.hpp"

using namespace pepcd;

TEST_CASE("multi-triangle densities against direct counts") {
  RandomStream g(50, 0);
  for (int k = 0; k < 200; ++k) {
    const std::vector<Point2d> anchors = testutil::random_points(g, 4 + g.below(8), 0, 10);
    const Triangulation tri = delaunay(anchors);
    const std::size_t n = 2 + g.below(60);
    const std::vector<Point2d> x = sample_uniform_hull(tri, n, g);
    const Pcd p = build_pcd(tri, x, 1 + 3 * g.uniform());
    for (const EdgeKind kind : {EdgeKind::And, EdgeKind::Or}) {
      const MultiDensityReport rep = multi_density(p, kind);
      const EdgeSet e = edge_set(p.digraph, kind);
      const std::size_t J = tri.size();
      std::vector<std::size_t> cnt(J, 0), edges(J, 0);
      for (std::size_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(p.instance.assignment[i])];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (e.edges(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
            ++edges[static_cast<std::size_t>(p.instance.assignment[i])];
      CHECK(rep.counts == cnt);
      CHECK(rep.edge_counts == edges);
      std::size_t total = 0, pairs = 0;
      double xi_hat = 0;
      for (std::size_t t = 0; t < J; ++t) {
        total += edges[t];
        pairs += cnt[t] * (cnt[t] - (cnt[t] > 0)) / 2;
        if (cnt[t] >= 2) {
          REQUIRE(rep.densities[t].has_value());
          CHECK(*rep.densities[t] == doctest::Approx(2.0 * edges[t] / (cnt[t] * (cnt[t] - 1.0))));
          xi_hat += rep.weights[t] * rep.weights[t] * *rep.densities[t];
        } else {
          CHECK_FALSE(rep.densities[t].has_value());
        }
      }
      CHECK(rep.edges == total);
      CHECK(rep.edges == e.edge_count());
      CHECK(rep.within_pairs == pairs);
      CHECK(rep.rho_I == edge_density(e));
      CHECK(rep.xi == rep.rho_I);  // exact
      CHECK(rep.xi_hat == doctest::Approx(xi_hat).epsilon(1e-12));
      if (pairs > 0) {
        CHECK(rep.rho_II == doctest::Approx(static_cast<double>(total) / pairs));
        CHECK(*rep.rho_II >= rep.rho_I);
      } else {
        CHECK_FALSE(rep.rho_II.has_value());
      }
    }
  }
}

TEST_CASE("single triangle reduces to the plain density") {
  RandomStream g(51, 0);
  const Triangle2d te = Triangle2d::equilateral();
  std::vector<Point2d> x;
  for (int i = 0; i < 50; ++i) x.push_back(testutil::rejection_point(te, g));
  const Pcd p = build_pcd(te, x, 2.0);
  const MultiDensityReport rep = multi_density(p, EdgeKind::Or);
  CHECK(rep.rho_I == *rep.rho_II);
  CHECK(rep.xi_hat == rep.rho_I);
  CHECK(rep.weights == std::vector<double>{1.0});

  const std::vector<Point2d> one = {te.centroid()};
  CHECK_THROWS_AS(multi_density(build_pcd(te, one, 2.0), EdgeKind::And), Error);
}
