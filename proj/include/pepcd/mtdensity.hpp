#pragma once

// Edge densities of a multi-triangle PCD: version I over all pairs, version II
// over within-triangle pairs, and the weighted mixtures Xi and Xi-hat.

#include <optional>
#include <vector>

#include "pepcd/graphs.hpp"

namespace pepcd {

struct MultiDensityReport {
  EdgeKind kind;
  std::size_t n = 0;
  std::vector<std::size_t> counts;                // n_i
  std::vector<std::size_t> edge_counts;           // |E_[i]|
  std::vector<std::optional<double>> densities;   // rho_[i], empty when n_i < 2
  std::vector<double> weights;                    // w_i = A(T_i) / A(hull)
  std::size_t edges = 0;                          // |E| = sum |E_[i]|
  std::size_t within_pairs = 0;                   // n_t = sum n_i (n_i - 1) / 2
  double rho_I = 0.0;                             // 2|E| / (n(n-1))
  std::optional<double> rho_II;                   // |E| / n_t, empty when n_t = 0
  double xi = 0.0;                                // sum n_i(n_i-1)/(n(n-1)) rho_[i]
  double xi_hat = 0.0;                            // sum w_i^2 rho_[i]
};

/// Needs n >= 2. Xi is accumulated from integer counts so it equals rho_I
/// bit for bit.
MultiDensityReport multi_density(const Pcd& pcd, EdgeKind kind);

}  // namespace pepcd
