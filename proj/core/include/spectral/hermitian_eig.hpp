#pragma once

#include <cstddef>
#include <vector>

#include "spectral/matrix.hpp"

namespace spectral {

/// Eigenvalues of a Hermitian matrix in non-increasing order together with
/// a unitary matrix whose k-th column is an eigenvector for eigenvalues[k].
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius mass is at most this times ‖A‖_F.
  double convergence_tol = 1e-14;
  int max_sweeps = 60;
  /// Accepted ‖A − A*‖_F relative to ‖A‖_F.
  double hermit_tol = 1e-12;
};

/// Cyclic-by-row complex Jacobi eigensolver.
///
/// Input is symmetrised to (A + A*)/2 after the Hermiticity check, so the
/// returned decomposition is exact for that matrix. Ties in the final sort
/// keep the solver's output order.
SpectralDecomposition hermitian_eig(const ComplexMatrix& a, const JacobiOptions& options = {});

inline SpectralDecomposition hermitian_eig(const ComplexMatrix& a, double convergence_tol) {
  JacobiOptions options;
  options.convergence_tol = convergence_tol;
  return hermitian_eig(a, options);
}

}  // namespace spectral
