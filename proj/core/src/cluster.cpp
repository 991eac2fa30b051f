#include "spectral/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectral/error.hpp"

namespace spectral {

double default_cluster_tol(double scale) { return 1e-8 * std::max(1.0, scale); }

ClusterIndex locate_cluster(std::span<const double> eigenvalues, std::size_t m,
                            double cluster_tol) {
  const std::size_t n = eigenvalues.size();
  if (m < 1 || m > n) {
    throw Error(ErrorCode::dimension, "locate_cluster: index " + std::to_string(m) +
                                          " outside 1.." + std::to_string(n));
  }
  if (!(cluster_tol >= 0.0)) {
    throw Error(ErrorCode::precondition, "locate_cluster: tolerance must be nonnegative");
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (eigenvalues[k] < eigenvalues[k + 1]) {
      throw Error(ErrorCode::precondition,
                  "locate_cluster: eigenvalues not in non-increasing order at position " +
                      std::to_string(k + 1));
    }
  }

  // Zero-based walk outward from m − 1 while adjacent gaps stay within tol.
  std::size_t first = m - 1;
  while (first > 0 && eigenvalues[first - 1] - eigenvalues[first] <= cluster_tol) --first;
  std::size_t last = m - 1;
  while (last + 1 < n && eigenvalues[last] - eigenvalues[last + 1] <= cluster_tol) ++last;

  ClusterIndex c;
  c.m = m;
  c.lo = first + 1;
  c.hi = last + 1;
  c.i = m - c.lo + 1;
  c.j = c.hi - m;
  c.r = c.i + c.j;
  c.value = eigenvalues[m - 1];
  c.tol_used = cluster_tol;
  c.width = eigenvalues[first] - eigenvalues[last];
  return c;
}

double cluster_gap_guard(std::span<const double> eigenvalues, const ClusterIndex& c) {
  double guard = std::numeric_limits<double>::infinity();
  if (c.lo > 1) guard = std::min(guard, eigenvalues[c.lo - 2] - eigenvalues[c.lo - 1]);
  if (c.hi < eigenvalues.size()) guard = std::min(guard, eigenvalues[c.hi - 1] - eigenvalues[c.hi]);
  return guard;
}

}  // namespace spectral
