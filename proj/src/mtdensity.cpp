#include "pepcd/mtdensity.hpp"

namespace pepcd {

MultiDensityReport multi_density(const Pcd& pcd, EdgeKind kind) {
  const std::size_t n = pcd.instance.size();
  if (n < 2) throw Error(ErrorKind::TooFewVertices, "multi-triangle density needs n >= 2");
  const std::size_t J = pcd.instance.triangulation.size();
  const EdgeSet e = edge_set(pcd.digraph, kind);
  const std::vector<int>& a = pcd.instance.assignment;

  MultiDensityReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.counts.assign(J, 0);
  rep.edge_counts.assign(J, 0);
  rep.weights = pcd.instance.triangulation.weights();
  for (int t : a) ++rep.counts[static_cast<std::size_t>(t)];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (e.edges(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) {
        if (a[i] != a[j]) throw Error(ErrorKind::InvalidArgument, "edge joins points of different triangles");
        ++rep.edge_counts[static_cast<std::size_t>(a[i])];
      }

  // n_i (n_i - 1) rho_[i] = 2 |E_[i]| exactly, so Xi reduces to integer sums.
  std::size_t twice_edges = 0;
  for (std::size_t t = 0; t < J; ++t) {
    const std::size_t ni = rep.counts[t];
    rep.edges += rep.edge_counts[t];
    rep.within_pairs += ni * (ni - (ni > 0 ? 1 : 0)) / 2;
    twice_edges += 2 * rep.edge_counts[t];
    if (ni >= 2) {
      const double rho = 2.0 * static_cast<double>(rep.edge_counts[t]) /
                         (static_cast<double>(ni) * static_cast<double>(ni - 1));
      rep.densities.emplace_back(rho);
      rep.xi_hat += rep.weights[t] * rep.weights[t] * rho;
    } else {
      rep.densities.emplace_back(std::nullopt);
    }
  }
  const double all_pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  rep.rho_I = 2.0 * static_cast<double>(rep.edges) / all_pairs;
  rep.xi = static_cast<double>(twice_edges) / all_pairs;
  if (rep.within_pairs > 0) rep.rho_II = static_cast<double>(rep.edges) / static_cast<double>(rep.within_pairs);
  return rep;
}

}  // namespace pepcd
