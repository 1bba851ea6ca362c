#pragma once

// PE-PCD construction on a triangulated anchor set, the AND/OR graphs derived
// from it, relative densities, domination numbers and kernel statistics.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "pepcd/kinds.hpp"
#include "pepcd/proximity.hpp"
#include "pepcd/triangulation.hpp"

namespace pepcd {

using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// arcs(i, j) == true iff X_j lies in N(X_i). Diagonal is false.
struct Digraph {
  BoolMatrix arcs;

  std::size_t size() const { return static_cast<std::size_t>(arcs.rows()); }
  std::size_t arc_count() const { return static_cast<std::size_t>(arcs.count()); }
};

/// Symmetric adjacency, diagonal false.
struct EdgeSet {
  BoolMatrix edges;
  EdgeKind kind;

  std::size_t size() const { return static_cast<std::size_t>(edges.rows()); }
  std::size_t edge_count() const { return static_cast<std::size_t>(edges.count()) / 2; }
};

struct PcdInstance {
  Triangulation triangulation;  // anchors are triangulation.sites
  std::vector<Point2d> sample;
  ExpansionParameter r;
  std::vector<int> assignment;  // triangle index per sample point

  std::size_t size() const { return sample.size(); }
};

struct Pcd {
  PcdInstance instance;
  Digraph digraph;
};

/// Arcs only join points of the same triangle. Points on shared edges go to
/// the lowest-index triangle. A point outside the hull raises OutsideDomain
/// carrying its index.
Pcd build_pcd(const Triangulation& triangulation, std::span<const Point2d> sample, const ExpansionParameter& r);

/// Triangulates the anchors first (three anchors give one triangle).
Pcd build_pcd(std::span<const Point2d> anchors, std::span<const Point2d> sample, const ExpansionParameter& r);

/// Single-triangle instance.
Pcd build_pcd(const Triangle2d& tri, std::span<const Point2d> sample, const ExpansionParameter& r);

/// Triangulation with sites y1, y2, y3 and the one triangle (0, 1, 2).
Triangulation single_triangle(const Triangle2d& tri);

/// Splits the sample into points inside the closed hull and the indices of
/// those outside.
struct HullFilter {
  std::vector<Point2d> inside;
  std::vector<std::size_t> outside;
};
HullFilter filter_to_hull(const Triangulation& triangulation, std::span<const Point2d> sample);

EdgeSet underlying_graph(const Digraph& d);   // OR
EdgeSet reflexivity_graph(const Digraph& d);  // AND
EdgeSet edge_set(const Digraph& d, EdgeKind kind);

/// |A| / (n(n-1)); TooFewVertices for n < 2.
double arc_density(const Digraph& d);
/// 2|E| / (n(n-1)); TooFewVertices for n < 2.
double edge_density(const EdgeSet& e);
double density(const Digraph& d, Statistic stat);

struct DominationResult {
  std::size_t value;
  bool exact;                     // false: greedy upper bound beyond the search cap
  std::vector<std::size_t> set;   // a dominating set of that size
};

/// Smallest set whose closed covers (out-neighbours for Arc, AND or OR
/// neighbours otherwise, plus self) contain every vertex. Exhaustive for sizes
/// up to max_exact, lexicographic subset order, first hit wins.
DominationResult domination_number(const Digraph& d, Statistic mode, std::size_t max_exact = 5);

/// Empirical law of (h12, h13) over replicated 3-point samples. Cells are
/// indexed by 2h in {0, 1, 2}; AND and OR kernels only use cells 0 and 2.
struct KernelJointPmf {
  Statistic kind;
  std::size_t replicates = 0;
  Eigen::Matrix3d counts = Eigen::Matrix3d::Zero();  // raw, counts(2h12, 2h13)

  // Symmetrized estimate: off-diagonal cells are averaged with their mirror.
  Eigen::Matrix3d probabilities() const;
  Eigen::Matrix3d raw_probabilities() const { return counts / static_cast<double>(replicates); }
  // P((h12, h13) = (a, b)) with a, b in {0, 1/2, 1}.
  double probability(double h12, double h13) const;
};

/// points holds consecutive triples (X1, X2, X3), all in tri.
KernelJointPmf joint_kernel_pmf(const Triangle2d& tri, const ExpansionParameter& r, std::span<const Point2d> points,
                                Statistic kind);

/// G(n, p): every pair joined independently with probability p.
EdgeSet er_random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace pepcd
