#include "pepcd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>

namespace pepcd {

namespace {

Point2d point_in(const Triangle2d& tri, RandomStream& rng) {
  // Rounding can push a point a hair across an edge; such draws are redone so
  // every sample lies in the closed triangle.
  for (;;) {
    const double su = std::sqrt(rng.uniform());
    const double v = rng.uniform();
    const Point2d p = (1.0 - su) * tri[0] + su * (1.0 - v) * tri[1] + su * v * tri[2];
    if (tri.contains(p)) return p;
  }
}

}  // namespace

std::vector<Point2d> sample_uniform_triangle(const Triangle2d& tri, std::size_t count, RandomStream& rng) {
  std::vector<Point2d> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(point_in(tri, rng));
  return out;
}

std::vector<Point2d> sample_uniform_hull(const Triangulation& triangulation, std::size_t count, RandomStream& rng) {
  if (triangulation.size() == 1) return sample_uniform_triangle(triangulation.triangle(0), count, rng);
  std::vector<Triangle2d> tris;
  for (std::size_t t = 0; t < triangulation.size(); ++t) tris.push_back(triangulation.triangle(t));
  std::vector<double> cumulative = triangulation.weights();
  std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
  std::vector<Point2d> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    out.push_back(point_in(tris[static_cast<std::size_t>(it - cumulative.begin())], rng));
  }
  return out;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  // keep the failure of the lowest index so errors are reproducible too
  std::mutex mu;
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += threads) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(mu);
          if (k < failed_at) failed_at = k, failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double ks_distance_normal(std::span<const double> values, double mean, double sd) {
  if (values.empty() || !(sd > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = 0.5 * std::erfc(-(v[i] - mean) / (sd * std::sqrt(2.0)));
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

MomentReport moment_report(std::span<const double> values, std::optional<NormalReference> reference) {
  if (values.size() < 2) throw Error(ErrorKind::InvalidArgument, "moments need at least 2 values");
  const double n = static_cast<double>(values.size());
  MomentReport m;
  m.count = values.size();
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - m.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m.variance = m2 / (n - 1.0);
  m2 /= n;
  m3 /= n;
  m4 /= n;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  m.degenerate = std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); });
  if (m.degenerate) {
    m.variance = 0.0;
    m.skewness = m.excess_kurtosis = nan;
  } else {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  const NormalReference ref = reference.value_or(NormalReference{m.mean, m.variance});
  m.ks_distance = ref.variance > 0.0 ? ks_distance_normal(values, ref.mean, std::sqrt(ref.variance)) : nan;
  return m;
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

Histogram make_histogram(std::span<const double> values, std::optional<std::size_t> bins) {
  Histogram h;
  if (values.empty()) return h;
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double lo = v.front(), hi = v.back();
  if (lo == hi) {
    h.edges = {lo, hi};
    h.counts = {v.size()};
    return h;
  }
  std::size_t k;
  if (bins) {
    if (*bins == 0) throw Error(ErrorKind::InvalidArgument, "histogram needs at least one bin");
    k = *bins;
  } else {
    const double iqr = quantile(v, 0.75) - quantile(v, 0.25);
    const double width = 2.0 * iqr / std::cbrt(static_cast<double>(v.size()));
    if (width > 0.0)
      k = static_cast<std::size_t>(std::ceil((hi - lo) / width));
    else  // Sturges when the quartiles coincide
      k = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(v.size())))) + 1;
    k = std::clamp<std::size_t>(k, 1, 10000);
  }
  const double width = (hi - lo) / static_cast<double>(k);
  h.edges.resize(k + 1);
  for (std::size_t i = 0; i < k; ++i) h.edges[i] = lo + static_cast<double>(i) * width;
  h.edges[k] = hi;
  h.counts.assign(k, 0);
  for (double x : v) {
    auto b = static_cast<std::size_t>((x - lo) / width);
    ++h.counts[std::min(b, k - 1)];
  }
  return h;
}

Triangulation simulation_geometry(const SimConfig& cfg) {
  if (cfg.anchors) return delaunay(*cfg.anchors);
  return single_triangle(Triangle2d::equilateral());
}

std::vector<Point2d> replicate_sample(const Triangulation& geometry, const SimConfig& cfg, std::size_t k) {
  RandomStream rng(cfg.seed, k);
  return sample_uniform_hull(geometry, cfg.n, rng);
}

std::vector<ReplicateStats> run_replicates(const SimConfig& cfg) {
  if (cfg.n < 2) throw Error(ErrorKind::TooFewVertices, "densities need n >= 2");
  if (cfg.replicates < 1) throw Error(ErrorKind::InvalidArgument, "need at least one replicate");
  if (cfg.statistics.empty()) throw Error(ErrorKind::InvalidArgument, "no statistic requested");
  const Triangulation geometry = simulation_geometry(cfg);

  std::vector<std::vector<double>> values(cfg.statistics.size(), std::vector<double>(cfg.replicates));
  parallel_for(cfg.replicates, cfg.threads, [&](std::size_t k) {
    const std::vector<Point2d> sample = replicate_sample(geometry, cfg, k);
    const Pcd pcd = build_pcd(geometry, sample, cfg.r);
    for (std::size_t s = 0; s < cfg.statistics.size(); ++s) values[s][k] = density(pcd.digraph, cfg.statistics[s]);
  });

  std::vector<ReplicateStats> out;
  for (std::size_t s = 0; s < cfg.statistics.size(); ++s) {
    ReplicateStats st{cfg.statistics[s], std::move(values[s]), {}, {}};
    if (st.values.size() >= 2) {
      st.moments = moment_report(st.values);
    } else {
      st.moments.count = 1;
      st.moments.mean = st.values.front();
      st.moments.degenerate = true;
    }
    st.histogram = make_histogram(st.values, cfg.histogram_bins);
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace pepcd
