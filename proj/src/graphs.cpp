#include "pepcd/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "pepcd/random.hpp"

namespace pepcd {

Triangulation single_triangle(const Triangle2d& tri) {
  Triangulation t;
  t.sites = {tri[0], tri[1], tri[2]};
  t.triangles = {{0, 1, 2}};
  t.hull = {0, 1, 2};
  return t;
}

namespace {

// Per-point data reused for every pair.
struct Located {
  int triangle;
  Barycentric<double> b;
  int region;
  int vertex;  // index of the triangle vertex the point sits on, or -1
};

std::vector<Located> locate_all(const Triangulation& tri, const std::vector<Triangle2d>& triangles,
                                std::span<const Point2d> sample) {
  std::vector<Located> out;
  out.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Point2d& x = sample[i];
    if (!std::isfinite(x.x()) || !std::isfinite(x.y()))
      throw Error(ErrorKind::DegenerateInput, "non-finite sample coordinate", i);
    const int t = tri.locate(x);
    if (t < 0) throw Error(ErrorKind::OutsideDomain, "sample point lies outside the convex hull", i);
    const Triangle2d& T = triangles[static_cast<std::size_t>(t)];
    const Barycentric<double> b = barycentric(T, x);
    out.push_back({t, b, vertex_region_of(b), T.vertex_index(x)});
  }
  return out;
}

}  // namespace

Pcd build_pcd(const Triangulation& triangulation, std::span<const Point2d> sample, const ExpansionParameter& r) {
  std::vector<Triangle2d> triangles;
  triangles.reserve(triangulation.size());
  for (std::size_t t = 0; t < triangulation.size(); ++t) triangles.push_back(triangulation.triangle(t));

  const std::vector<Located> loc = locate_all(triangulation, triangles, sample);
  const auto n = static_cast<Eigen::Index>(sample.size());

  Pcd out{PcdInstance{triangulation, {sample.begin(), sample.end()}, r, {}}, Digraph{BoolMatrix::Constant(n, n, false)}};
  out.instance.assignment.reserve(loc.size());
  for (const Located& l : loc) out.instance.assignment.push_back(l.triangle);

  for (Eigen::Index i = 0; i < n; ++i) {
    const Located& x = loc[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const Located& z = loc[static_cast<std::size_t>(j)];
      if (z.triangle != x.triangle) continue;
      out.digraph.arcs(i, j) = catches(x.b, x.region, x.vertex, z.b, z.vertex, r);
    }
  }
  return out;
}

Pcd build_pcd(std::span<const Point2d> anchors, std::span<const Point2d> sample, const ExpansionParameter& r) {
  return build_pcd(delaunay(anchors), sample, r);
}

Pcd build_pcd(const Triangle2d& tri, std::span<const Point2d> sample, const ExpansionParameter& r) {
  return build_pcd(single_triangle(tri), sample, r);
}

HullFilter filter_to_hull(const Triangulation& triangulation, std::span<const Point2d> sample) {
  HullFilter out;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (triangulation.locate(sample[i]) >= 0)
      out.inside.push_back(sample[i]);
    else
      out.outside.push_back(i);
  }
  return out;
}

EdgeSet underlying_graph(const Digraph& d) { return {d.arcs || d.arcs.transpose(), EdgeKind::Or}; }

EdgeSet reflexivity_graph(const Digraph& d) { return {d.arcs && d.arcs.transpose(), EdgeKind::And}; }

EdgeSet edge_set(const Digraph& d, EdgeKind kind) {
  if (kind == EdgeKind::And) return reflexivity_graph(d);
  if (kind == EdgeKind::Or) return underlying_graph(d);
  throw Error(ErrorKind::InvalidArgument, "a digraph yields AND or OR edges only");
}

namespace {

double pair_fraction(std::size_t count, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::TooFewVertices, "density needs at least 2 vertices");
  return static_cast<double>(count) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace

double arc_density(const Digraph& d) { return pair_fraction(d.arc_count(), d.size()); }

// 2|E| is the number of true entries of the symmetric matrix.
double edge_density(const EdgeSet& e) { return pair_fraction(static_cast<std::size_t>(e.edges.count()), e.size()); }

double density(const Digraph& d, Statistic stat) {
  switch (stat) {
    case Statistic::Arc: return arc_density(d);
    case Statistic::And: return edge_density(reflexivity_graph(d));
    case Statistic::Or: return edge_density(underlying_graph(d));
  }
  return 0.0;
}

namespace {

using Bits = std::vector<std::uint64_t>;

class CoverSearch {
 public:
  CoverSearch(const BoolMatrix& adj, std::size_t n) : n_(n), words_((n + 63) / 64), covers_(n, Bits(words_, 0)) {
    for (std::size_t i = 0; i < n; ++i) {
      set(covers_[i], i);
      for (std::size_t j = 0; j < n; ++j)
        if (adj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) set(covers_[i], j);
    }
    full_ = Bits(words_, ~std::uint64_t(0));
    if (n % 64) full_.back() = (std::uint64_t(1) << (n % 64)) - 1;
  }

  std::vector<std::size_t> greedy() const {
    Bits covered(words_, 0);
    std::vector<std::size_t> chosen;
    while (covered != full_) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        std::size_t gain = 0;
        for (std::size_t w = 0; w < words_; ++w) gain += std::popcount(covers_[i][w] & ~covered[w]);
        if (gain > best_gain) best = i, best_gain = gain;
      }
      chosen.push_back(best);
      for (std::size_t w = 0; w < words_; ++w) covered[w] |= covers_[best][w];
    }
    return chosen;
  }

  // First k-subset in lexicographic order that dominates, if any.
  bool search(std::size_t k, std::vector<std::size_t>& chosen) const {
    chosen.clear();
    return extend(0, k, Bits(words_, 0), chosen);
  }

 private:
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

  bool extend(std::size_t start, std::size_t left, const Bits& covered, std::vector<std::size_t>& chosen) const {
    if (left == 0) return covered == full_;
    for (std::size_t i = start; i + left <= n_; ++i) {
      Bits next = covered;
      for (std::size_t w = 0; w < words_; ++w) next[w] |= covers_[i][w];
      chosen.push_back(i);
      if (extend(i + 1, left - 1, next, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Bits> covers_;
  Bits full_;
};

}  // namespace

DominationResult domination_number(const Digraph& d, Statistic mode, std::size_t max_exact) {
  const std::size_t n = d.size();
  if (n == 0) return {0, true, {}};
  BoolMatrix adj;
  switch (mode) {
    case Statistic::Arc: adj = d.arcs; break;
    case Statistic::And: adj = d.arcs && d.arcs.transpose(); break;
    case Statistic::Or: adj = d.arcs || d.arcs.transpose(); break;
  }
  const CoverSearch search(adj, n);
  std::vector<std::size_t> greedy = search.greedy();
  std::vector<std::size_t> chosen;
  const std::size_t limit = std::min(max_exact, greedy.size() - 1);
  for (std::size_t k = 1; k <= limit; ++k)
    if (search.search(k, chosen)) return {k, true, chosen};
  // greedy is optimal once every smaller size has been ruled out
  return {greedy.size(), greedy.size() <= max_exact + 1, greedy};
}

Eigen::Matrix3d KernelJointPmf::probabilities() const {
  const Eigen::Matrix3d sym = (counts + counts.transpose()) / 2.0;
  return sym / static_cast<double>(replicates);
}

double KernelJointPmf::probability(double h12, double h13) const {
  const auto cell = [](double h) {
    const double twice = 2.0 * h;
    const long k = std::lround(twice);
    if (k < 0 || k > 2 || static_cast<double>(k) != twice)
      throw Error(ErrorKind::InvalidArgument, "kernel values are 0, 1/2 or 1");
    return static_cast<Eigen::Index>(k);
  };
  return probabilities()(cell(h12), cell(h13));
}

KernelJointPmf joint_kernel_pmf(const Triangle2d& tri, const ExpansionParameter& r, std::span<const Point2d> points,
                                Statistic kind) {
  if (points.empty() || points.size() % 3 != 0)
    throw Error(ErrorKind::InvalidArgument, "joint kernel needs replicates of exactly 3 points");
  struct P {
    Barycentric<double> b;
    int region, vertex;
  };
  const auto prep = [&](std::size_t i) {
    if (!tri.contains(points[i])) throw Error(ErrorKind::OutsideDomain, "point lies outside the triangle", i);
    const Barycentric<double> b = barycentric(tri, points[i]);
    return P{b, vertex_region_of(b), tri.vertex_index(points[i])};
  };
  const auto arc = [&](const P& x, const P& z) { return catches(x.b, x.region, x.vertex, z.b, z.vertex, r); };
  // 2h for the pair (x, z)
  const auto twice_h = [&](const P& x, const P& z) -> Eigen::Index {
    const bool xz = arc(x, z), zx = arc(z, x);
    switch (kind) {
      case Statistic::Arc: return int(xz) + int(zx);
      case Statistic::And: return (xz && zx) ? 2 : 0;
      case Statistic::Or: return (xz || zx) ? 2 : 0;
    }
    return 0;
  };

  KernelJointPmf pmf;
  pmf.kind = kind;
  pmf.replicates = points.size() / 3;
  for (std::size_t k = 0; k < points.size(); k += 3) {
    const P x1 = prep(k), x2 = prep(k + 1), x3 = prep(k + 2);
    pmf.counts(twice_h(x1, x2), twice_h(x1, x3)) += 1.0;
  }
  return pmf;
}

EdgeSet er_random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "edge probability must lie in [0, 1]");
  RandomStream rng(seed, 0);
  const auto m = static_cast<Eigen::Index>(n);
  EdgeSet e{BoolMatrix::Constant(m, m, false), EdgeKind::Simple};
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) e.edges(i, j) = e.edges(j, i) = rng.bernoulli(p);
  return e;
}

}  // namespace pepcd
