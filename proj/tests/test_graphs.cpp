#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "pepcd/asymptotics.hpp"
#include "pepcd/graphs.hpp"
#include "pepcd/montecarlo.hpp"
#include "test_util.hpp"

using namespace pepcd;

namespace {

const Triangle2d te = Triangle2d::equilateral();

std::vector<Point2d> te_sample(RandomStream& g, std::size_t n) {
  std::vector<Point2d> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(testutil::rejection_point(te, g));
  return out;
}

// Plain subset enumeration, smallest size first.
std::size_t brute_domination(const BoolMatrix& adj) {
  const auto n = static_cast<std::size_t>(adj.rows());
  std::size_t best = n;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k >= best) continue;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool hit = false;
      for (std::size_t u = 0; u < n && !hit; ++u)
        hit = (mask >> u & 1) && (u == v || adj(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)));
      ok = hit;
    }
    if (ok) best = k;
  }
  return best;
}

}  // namespace

TEST_CASE("hand-checked pair in T_e at r = 2") {
  // x: b1 = .75, t = .25, N(x) = {b1 >= .5}; z: b2 = .6 wins, t = .4, N(z) = {b2 >= .2}
  const std::vector<Point2d> pts = {Point2d(0.25, 0), Point2d(0.6, 0)};
  const Pcd p = build_pcd(te, pts, 2.0);
  CHECK_FALSE(p.digraph.arcs(0, 1));
  CHECK(p.digraph.arcs(1, 0));
  CHECK(arc_density(p.digraph) == 0.5);
  CHECK(density(p.digraph, Statistic::And) == 0.0);
  CHECK(density(p.digraph, Statistic::Or) == 1.0);

  // z = M_3: tie goes to y1, t = 1/2 and rt = 1 so N(z) = T; x catches z on the boundary
  const std::vector<Point2d> tie = {Point2d(0.25, 0), Point2d(0.5, 0)};
  const Pcd q = build_pcd(te, tie, 2.0);
  CHECK(q.digraph.arcs(0, 1));
  CHECK(q.digraph.arcs(1, 0));
}

TEST_CASE("small and limiting instances") {
  const std::vector<Point2d> one = {te.centroid()};
  const Pcd p1 = build_pcd(te, one, 2.0);
  CHECK(p1.digraph.size() == 1);
  CHECK(p1.digraph.arc_count() == 0);
  CHECK_THROWS_AS(arc_density(p1.digraph), Error);
  const DominationResult d1 = domination_number(p1.digraph, Statistic::Arc);
  CHECK(d1.value == 1);

  RandomStream g(30, 0);
  const std::vector<Point2d> pts = te_sample(g, 40);
  const Pcd full = build_pcd(te, pts, ExpansionParameter::infinity());
  CHECK(full.digraph.arc_count() == 40 * 39);
  CHECK(density(full.digraph, Statistic::And) == 1.0);
  CHECK(domination_number(full.digraph, Statistic::And).value == 1);

  // a vertex catches only itself, even at r = inf
  std::vector<Point2d> with_vertex = {te[1], te.centroid()};
  const Pcd v = build_pcd(te, with_vertex, ExpansionParameter::infinity());
  CHECK_FALSE(v.digraph.arcs(0, 1));
  CHECK(v.digraph.arcs(1, 0));
}

TEST_CASE("outside points are reported by index") {
  const std::vector<Point2d> pts = {te.centroid(), Point2d(0.5, 0.1), Point2d(3, 3)};
  try {
    build_pcd(te, pts, 2.0);
    FAIL("accepted an outside point");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutsideDomain);
    CHECK(e.index() == std::optional<std::size_t>(2));
  }
  const std::vector<Point2d> nan = {te.centroid(), Point2d(std::nan(""), 0)};
  CHECK_THROWS_AS(build_pcd(te, nan, 2.0), Error);

  const HullFilter f = filter_to_hull(single_triangle(te), pts);
  CHECK(f.inside.size() == 2);
  CHECK(f.outside == std::vector<std::size_t>{2});
}

TEST_CASE("no arcs across triangles") {
  const std::vector<Point2d> anchors = {Point2d(0, 0), Point2d(2, 0), Point2d(2, 2), Point2d(0, 2), Point2d(1, 3)};
  const Triangulation tri = delaunay(anchors);
  RandomStream g(31, 0);
  const std::vector<Point2d> pts = sample_uniform_hull(tri, 200, g);
  const Pcd p = build_pcd(tri, pts, ExpansionParameter::infinity());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const bool same = p.instance.assignment[i] == p.instance.assignment[j];
      if (i != j) CHECK(p.digraph.arcs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == same);
    }

  // a point on the shared diagonal goes to the lowest-index triangle
  const std::vector<Point2d> sq = {Point2d(0, 0), Point2d(1, 0), Point2d(0, 1), Point2d(1, 1)};
  const Triangulation t2 = delaunay(sq);
  const std::vector<Point2d> on = {Point2d(0.5, 0.5)};
  CHECK(build_pcd(t2, on, 2.0).instance.assignment[0] == 0);
}

TEST_CASE("density identities") {
  RandomStream g(32, 0);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + g.below(30);
    const double r = 1 + 3 * g.uniform();
    const std::vector<Point2d> pts = te_sample(g, n);
    const Pcd p = build_pcd(te, pts, r);
    const EdgeSet a = reflexivity_graph(p.digraph), o = underlying_graph(p.digraph);
    // |A| = |E_and| + |E_or| exactly
    CHECK(p.digraph.arc_count() == a.edge_count() + o.edge_count());
    CHECK(arc_density(p.digraph) == doctest::Approx((edge_density(a) + edge_density(o)) / 2).epsilon(1e-15));
    CHECK((a.edges && !o.edges).count() == 0);
    CHECK((a.edges == a.edges.transpose()).all());
    CHECK((o.edges == o.edges.transpose()).all());
    CHECK_FALSE(o.edges.matrix().diagonal().any());

    // relabelling the sample permutes the digraph
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::vector<Point2d> shuffled;
    for (std::size_t i : perm) shuffled.push_back(pts[i]);
    const Pcd q = build_pcd(te, shuffled, r);
    bool same = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        same = same && q.digraph.arcs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                           p.digraph.arcs(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j]));
    CHECK(same);
    CHECK(arc_density(q.digraph) == arc_density(p.digraph));
  }
}

TEST_CASE("digraph is invariant under the standardizing map") {
  RandomStream g(33, 0);
  for (int k = 0; k < 100; ++k) {
    const Triangle2d t = testutil::random_triangle(g);
    const AffineMap2d m = standardize_map(t);
    std::vector<Point2d> pts, mapped;
    for (int i = 0; i < 30; ++i) {
      pts.push_back(testutil::rejection_point(t, g));
      mapped.push_back(m(pts.back()));
    }
    const double r = 1 + 3 * g.uniform();
    const Pcd a = build_pcd(t, pts, r);
    // mapped points may stray an ulp outside T_e; such instances are skipped
    bool inside = true;
    for (const Point2d& x : mapped) inside = inside && te.contains(x);
    if (!inside) continue;
    const Pcd b = build_pcd(te, mapped, r);
    CHECK((a.digraph.arcs == b.digraph.arcs).all());
  }
}

TEST_CASE("domination numbers") {
  RandomStream g(34, 0);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + g.below(12);
    const double r = 1 + 2 * g.uniform();
    const Pcd p = build_pcd(te, te_sample(g, n), r);
    const std::size_t arc = domination_number(p.digraph, Statistic::Arc).value;
    const std::size_t a = domination_number(p.digraph, Statistic::And).value;
    const std::size_t o = domination_number(p.digraph, Statistic::Or).value;
    CHECK(arc == brute_domination(p.digraph.arcs));
    CHECK(a == brute_domination(reflexivity_graph(p.digraph).edges));
    CHECK(o == brute_domination(underlying_graph(p.digraph).edges));
    CHECK(o <= arc);
    CHECK(arc <= a);
    // the point farthest from its vertex in each region catches that region
    CHECK(arc <= 3);
  }

  const Pcd full = build_pcd(te, te_sample(g, 100), ExpansionParameter::infinity());
  const DominationResult d = domination_number(full.digraph, Statistic::Arc);
  CHECK(d.value == 1);
  CHECK(d.exact);
  CHECK(d.set == std::vector<std::size_t>{0});

  // search cap: an empty graph on 10 vertices needs all of them
  Digraph empty{BoolMatrix::Constant(10, 10, false)};
  const DominationResult capped = domination_number(empty, Statistic::Arc, 3);
  CHECK(capped.value == 10);
  CHECK_FALSE(capped.exact);
  CHECK(domination_number(empty, Statistic::Arc, 9).exact);
}

TEST_CASE("kernel joint pmf") {
  RandomStream g(35, 0);
  const std::vector<Point2d> pts = te_sample(g, 3 * 20000);

  const KernelJointPmf inf = joint_kernel_pmf(te, ExpansionParameter::infinity(), pts, Statistic::And);
  CHECK(inf.replicates == 20000);
  CHECK(inf.probability(1, 1) == 1.0);

  const KernelJointPmf one = joint_kernel_pmf(te, 1.0, pts, Statistic::And);
  CHECK(one.probability(0, 0) == 1.0);

  for (const double r : {1.5, 2.0}) {
    for (const Statistic s : {Statistic::And, Statistic::Or}) {
      const KernelJointPmf pmf = joint_kernel_pmf(te, r, pts, s);
      const Eigen::Matrix3d P = pmf.probabilities();
      CHECK(P.sum() == doctest::Approx(1.0));
      CHECK((P - P.transpose()).cwiseAbs().maxCoeff() < 1e-15);
      const double p = s == Statistic::And ? mean_and(r) : mean_or(r);
      const double nu = s == Statistic::And ? cov_kernel_and(r) : cov_kernel_or(r);
      const double marginal = P.row(2).sum();
      CAPTURE(r);
      CHECK(std::abs(marginal - p) < 4 * std::sqrt(p * (1 - p) / 20000));
      // Cov[h12, h13] = P(1, 1) - p^2
      CHECK(std::abs(P(2, 2) - marginal * marginal - nu) < 0.01);
    }
    const KernelJointPmf arc = joint_kernel_pmf(te, r, pts, Statistic::Arc);
    CHECK(arc.raw_probabilities().sum() == doctest::Approx(1.0));
  }

  const std::vector<Point2d> four(pts.begin(), pts.begin() + 4);
  CHECK_THROWS_AS(joint_kernel_pmf(te, 2.0, four, Statistic::And), Error);
}

TEST_CASE("Erdos-Renyi graphs") {
  CHECK(er_random_graph(30, 0.0, 1).edge_count() == 0);
  CHECK(er_random_graph(30, 1.0, 1).edge_count() == 435);
  const EdgeSet e = er_random_graph(30, 0.3, 7);
  CHECK((e.edges == e.edges.transpose()).all());
  CHECK_FALSE(e.edges.matrix().diagonal().any());
  CHECK((er_random_graph(30, 0.3, 7).edges == e.edges).all());

  // density variance is p(1-p) / C(n,2)
  std::vector<double> d;
  for (std::uint64_t s = 0; s < 2000; ++s) d.push_back(edge_density(er_random_graph(20, 0.3, s)));
  const MomentReport m = moment_report(d);
  CHECK(m.mean == doctest::Approx(0.3).epsilon(0.01));
  CHECK(m.variance == doctest::Approx(0.21 / 190).epsilon(0.1));
}
