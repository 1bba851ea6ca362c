#pragma once

// Seeded sampling and the replicate engine. Replicate k always draws from
// RandomStream(seed, k), so the results do not depend on the thread count.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "pepcd/graphs.hpp"
#include "pepcd/random.hpp"

namespace pepcd {

/// P = (1 - sqrt u) A + sqrt u (1 - v) B + sqrt u v C.
std::vector<Point2d> sample_uniform_triangle(const Triangle2d& tri, std::size_t count, RandomStream& rng);

/// Triangle i with probability A(T_i)/A(hull), then uniform inside it.
std::vector<Point2d> sample_uniform_hull(const Triangulation& triangulation, std::size_t count, RandomStream& rng);

/// Runs body(k) for k in [0, count) on up to `threads` workers (0 = hardware).
/// body must only touch slot k of any shared output.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

struct SimConfig {
  std::optional<std::vector<Point2d>> anchors;  // empty: T_e
  ExpansionParameter r = 2.0;
  std::size_t n = 100;
  std::size_t replicates = 1000;
  std::uint64_t seed = 0;
  std::vector<Statistic> statistics = {Statistic::Arc, Statistic::And, Statistic::Or};
  unsigned threads = 1;
  std::optional<std::size_t> histogram_bins;  // Freedman-Diaconis if unset
};

struct MomentReport {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;  // NaN for constant data
  double excess_kurtosis = 0.0;
  double ks_distance = 0.0;  // NaN when the reference normal is a point mass
  bool degenerate = false;   // true for constant data
};

struct NormalReference {
  double mean;
  double variance;
};

/// Sample moments; KS distance against N(mean, variance) of the data unless a
/// reference is supplied. Needs at least 2 values.
MomentReport moment_report(std::span<const double> values, std::optional<NormalReference> reference = std::nullopt);

/// sup |F_n - Phi((x - mean)/sd)|.
double ks_distance_normal(std::span<const double> values, double mean, double sd);

struct Histogram {
  std::vector<double> edges;  // bins + 1 edges
  std::vector<std::size_t> counts;
};

/// Freedman-Diaconis bin width unless bins is given. Constant data give one bin.
Histogram make_histogram(std::span<const double> values, std::optional<std::size_t> bins = std::nullopt);

struct ReplicateStats {
  Statistic statistic;
  std::vector<double> values;  // one density per replicate, replicate order
  MomentReport moments;
  Histogram histogram;
};

/// The geometry used by a config: Delaunay of the anchors, or T_e.
Triangulation simulation_geometry(const SimConfig& cfg);

/// Sample of replicate k, as drawn by run_replicates.
std::vector<Point2d> replicate_sample(const Triangulation& geometry, const SimConfig& cfg, std::size_t k);

/// One ReplicateStats per requested statistic, in request order.
std::vector<ReplicateStats> run_replicates(const SimConfig& cfg);

}  // namespace pepcd
