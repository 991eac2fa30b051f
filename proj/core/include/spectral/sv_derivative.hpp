#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectral/cluster.hpp"
#include "spectral/eig_derivative.hpp"
#include "spectral/family.hpp"
#include "spectral/hermitian_eig.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

/// Singular values of an m x n matrix read off the spectrum of its
/// Hermitian embedding [[0, A], [A*, 0]].
struct SingularDecomposition {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> sigma;        ///< q = min(rows, cols) values, non-increasing, ≥ 0
  SpectralDecomposition embedding;  ///< eigenpairs of the embedding; vectors is W

  std::size_t q() const noexcept { return sigma.size(); }
  /// Top `rows` rows of w: the u_j parts of each column.
  ComplexMatrix u_block(const ComplexMatrix& w) const { return w.block(0, 0, rows, w.cols()); }
  /// Bottom `cols` rows of w: the v_j parts of each column.
  ComplexMatrix v_block(const ComplexMatrix& w) const { return w.block(rows, 0, cols, w.cols()); }
};

ComplexMatrix wielandt_embed(const ComplexMatrix& a);

/// The Hermitian family x ↦ [[0, A(x)], [A(x)*, 0]] with partials
/// [[0, ∂_jA], [∂_jA*, 0]].
MatrixFamily wielandt_family(const MatrixFamily& family);

SingularDecomposition sv_decomposition(const ComplexMatrix& a);

/// Singular values at or below 1e-6 · ‖A‖_F are refused by the derivative
/// routines.
double sigma_floor(const ComplexMatrix& a);

struct SvFrame {
  SingularDecomposition svd;
  ClusterIndex cluster;  ///< positions within 1..q of the embedding spectrum
  ComplexMatrix w2;      ///< (m+n) x r columns of W spanning the cluster
  double gap_guard = 0.0;
  double floor = 0.0;
  std::vector<std::string> warnings;
};

/// Resolves the cluster of σ_k (1-based) at x₀. Throws sigma_at_zero when
/// σ_k ≤ σ_floor or the cluster reaches past position q.
SvFrame sv_cluster_frame(const MatrixFamily& family, std::span<const double> x0, std::size_t k,
                         std::optional<double> cluster_tol = std::nullopt);

/// Embedding-path F′(d) = W₂* (Σ_j d_j ∂_jM) W₂ for a resolved frame.
ComplexMatrix sv_f_prime_embedding(const MatrixFamily& family, std::span<const double> x0,
                                   const SvFrame& frame, std::span<const double> d);

/// Reduced F′(d) = U₂* G V₂ + (U₂* G V₂)*, G = Σ_j d_j ∂_jA.
ComplexMatrix sv_f_prime_reduced(const MatrixFamily& family, std::span<const double> x0,
                                 const SvFrame& frame, std::span<const double> d);

/// One-sided derivative of σ_k through the full embedding.
DerivativeReport sv_directional_derivative(const MatrixFamily& family,
                                           std::span<const double> x0, std::size_t k,
                                           std::span<const double> d,
                                           std::optional<double> cluster_tol = std::nullopt);

/// Same quantity through the r x r reduced formula; the default path.
DerivativeReport sv_derivative_reduced(const MatrixFamily& family, std::span<const double> x0,
                                       std::size_t k, std::span<const double> d,
                                       std::optional<double> cluster_tol = std::nullopt);

/// Gradient of t_k(x) = σ_lo(x) + … + σ_hi(x) at x₀.
std::vector<double> sv_cluster_sum_gradient(const MatrixFamily& family,
                                            std::span<const double> x0, std::size_t k,
                                            std::optional<double> cluster_tol = std::nullopt);

}  // namespace spectral
