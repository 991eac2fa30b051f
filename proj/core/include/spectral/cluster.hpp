#pragma once

#include <cstddef>
#include <span>

namespace spectral {

/// Multiplicity bookkeeping for the m-th largest eigenvalue.
///
/// All indices are 1-based positions in the non-increasing spectrum:
/// the cluster occupies lo..hi, with lo = m − i + 1 and hi = m + j.
struct ClusterIndex {
  std::size_t m = 0;
  std::size_t i = 0;  ///< members at or before m, counting m itself
  std::size_t j = 0;  ///< members strictly after m
  std::size_t r = 0;  ///< multiplicity i + j
  double value = 0.0; ///< λ_m
  std::size_t lo = 0;
  std::size_t hi = 0;
  double tol_used = 0.0;
  double width = 0.0; ///< λ_lo − λ_hi, may exceed tol_used through chaining
};

/// 1e-8 · max(1, scale), scale being a norm estimate of the matrix.
double default_cluster_tol(double scale);

/// Cluster containing position m. Neighbours k, k+1 belong to the same
/// cluster iff λ_k − λ_{k+1} ≤ cluster_tol, and membership is chained.
///
/// Throws on m out of range, negative tolerance, or an increasing pair.
ClusterIndex locate_cluster(std::span<const double> eigenvalues, std::size_t m,
                            double cluster_tol);

/// min(λ_{lo−1} − λ_lo, λ_hi − λ_{hi+1}); a missing neighbour counts as +∞.
double cluster_gap_guard(std::span<const double> eigenvalues, const ClusterIndex& c);

}  // namespace spectral
