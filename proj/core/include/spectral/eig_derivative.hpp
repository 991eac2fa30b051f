#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectral/cluster.hpp"
#include "spectral/family.hpp"
#include "spectral/hermitian_eig.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

/// Outcome of one directional-derivative evaluation.
struct DerivativeReport {
  ClusterIndex cluster;
  std::vector<double> direction;
  ComplexMatrix f_prime;          ///< r x r Hermitian compression
  std::vector<double> mu;         ///< eigenvalues of f_prime, non-increasing
  std::size_t selected_index = 0; ///< 1-based position in mu (= cluster.i)
  double derivative = 0.0;
  double gap_guard = 0.0;
  std::vector<std::string> warnings;
  std::string path = "hermitian"; ///< "hermitian", "embedding" or "reduced"
};

/// Decomposition at x₀ with the cluster of position m resolved.
struct ClusterFrame {
  SpectralDecomposition decomposition;
  ClusterIndex cluster;
  ComplexMatrix basis;  ///< n x r orthonormal basis of the cluster eigenspace
  double gap_guard = 0.0;
  std::vector<std::string> warnings;
};

inline constexpr double kUnitTol = 1e-12;

/// Throws unless |‖d‖₂ − 1| ≤ kUnitTol.
void require_unit_direction(std::span<const double> d);

/// d / ‖d‖₂. Never applied implicitly by the derivative routines.
std::vector<double> normalized(std::span<const double> d);

/// Columns lo..hi of the eigenvector matrix.
ComplexMatrix eigvec_block(const SpectralDecomposition& decomp, const ClusterIndex& c);

/// Warnings for a resolved cluster: near-degenerate separation
/// (guard ≤ 10·tol) and chained width exceeding the tolerance.
std::vector<std::string> cluster_warnings(const ClusterIndex& c, double gap_guard);

ClusterFrame eig_cluster_frame(const MatrixFamily& family, std::span<const double> x0,
                               std::size_t m, std::optional<double> cluster_tol = std::nullopt);

/// basis* (Σ_j weights_j ∂A/∂x_j(x₀)) basis, symmetrised. Linear in the
/// weights; no unit-norm requirement.
ComplexMatrix compress_partials(const MatrixFamily& family, std::span<const double> x0,
                                const ComplexMatrix& basis, std::span<const double> weights);

/// F′(d) = U₂* (Σ_j d_j ∂A/∂x_j(x₀)) U₂ for a Hermitian family and unit d.
ComplexMatrix build_f_prime(const MatrixFamily& family, std::span<const double> x0,
                            const ComplexMatrix& u2, std::span<const double> d);

/// Eigenvalues of f_prime and the i-th of them as the derivative.
DerivativeReport report_from_f_prime(const ClusterIndex& cluster, ComplexMatrix f_prime,
                                     std::span<const double> d, double gap_guard,
                                     std::vector<std::string> warnings);

/// One-sided derivative of the m-th largest eigenvalue (m is 1-based) of a
/// Hermitian family at x₀ along unit d.
DerivativeReport eig_directional_derivative(const MatrixFamily& family,
                                            std::span<const double> x0, std::size_t m,
                                            std::span<const double> d,
                                            std::optional<double> cluster_tol = std::nullopt);

/// Derivatives of every member lo..hi of the cluster containing m, all read
/// off a single eigendecomposition of F′(d).
std::vector<DerivativeReport> eig_cluster_directional_derivatives(
    const MatrixFamily& family, std::span<const double> x0, std::size_t m,
    std::span<const double> d, std::optional<double> cluster_tol = std::nullopt);

/// Gradient of the cluster sum t_m(x) = λ_lo(x) + … + λ_hi(x) at x₀:
/// g_j = tr(U₂* ∂A/∂x_j(x₀) U₂).
std::vector<double> cluster_sum_gradient(const MatrixFamily& family, std::span<const double> x0,
                                         std::size_t m,
                                         std::optional<double> cluster_tol = std::nullopt);

}  // namespace spectral
