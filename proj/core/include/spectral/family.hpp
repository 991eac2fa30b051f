#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "spectral/matrix.hpp"

namespace spectral {

/// Axis-aligned parameter box [lower, upper].
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  bool contains(std::span<const double> x) const;
};

/// A C¹ matrix function x ↦ A(x) on a parameter domain in ℝᵖ, with exact
/// partial derivatives. Parameter coordinates are zero-based.
///
/// Values are immutable after construction; evaluator and partials must be
/// reentrant.
class MatrixFamily {
 public:
  using Evaluator = std::function<ComplexMatrix(std::span<const double>)>;
  using Partial = std::function<ComplexMatrix(std::span<const double>, std::size_t)>;

  MatrixFamily(std::size_t param_dim, std::size_t rows, std::size_t cols, bool hermitian,
               Evaluator evaluator, Partial partial, std::optional<Box> domain = std::nullopt);

  std::size_t param_dim() const noexcept { return param_dim_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_hermitian() const noexcept { return hermitian_; }
  const std::optional<Box>& domain() const noexcept { return domain_; }

  ComplexMatrix evaluate(std::span<const double> x) const;
  ComplexMatrix partial(std::span<const double> x, std::size_t j) const;

  /// Σ_j weights[j] · ∂A/∂x_j(x). No normalisation of the weights.
  ComplexMatrix directional_partial(std::span<const double> x,
                                    std::span<const double> weights) const;

 private:
  void check_point(std::span<const double> x) const;
  void check_shape(const ComplexMatrix& m, const char* what) const;

  std::size_t param_dim_;
  std::size_t rows_;
  std::size_t cols_;
  bool hermitian_;
  Evaluator evaluator_;
  Partial partial_;
  std::optional<Box> domain_;
};

/// Payload for A(x) = base + Σ_j x_j · coefficients[j].
struct AffineFamily {
  ComplexMatrix base;
  std::vector<ComplexMatrix> coefficients;
  /// Declared Hermitian. make_affine verifies the declaration.
  bool hermitian = false;
  std::optional<Box> domain;
};

/// Relative Hermiticity slack: ‖A − A*‖_F ≤ kHermitTol · ‖A‖_F.
inline constexpr double kHermitTol = 1e-12;

bool is_hermitian_within_tol(const ComplexMatrix& a);

/// Affine family; Hermitian flag inferred from the inputs.
MatrixFamily make_affine(const ComplexMatrix& base, std::vector<ComplexMatrix> coefficients,
                         std::optional<Box> domain = std::nullopt);

/// Affine family from a payload. A payload declared Hermitian whose matrices
/// are not is rejected; a payload declared non-Hermitian stays non-Hermitian.
MatrixFamily make_affine(const AffineFamily& payload);

/// A(x₁, x₂) = [[x₁, i·x₂], [−i·x₂, −x₁]], eigenvalues ±‖x‖₂.
MatrixFamily kato_family();

/// ‖(A(x₀+h e_j) − A(x₀−h e_j))/(2h) − ∂A/∂x_j(x₀)‖_F.
double fd_partial_check(const MatrixFamily& family, std::span<const double> x0, std::size_t j,
                        double h);

}  // namespace spectral
