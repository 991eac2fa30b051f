#pragma once

// Independent reference spectra computed with Eigen. Test-only.

#include <algorithm>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "spectral/matrix.hpp"

namespace spectral::testing {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline std::vector<double> reference_eigenvalues(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(hermitian),
                                                         Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Singular values as square roots of the eigenvalues of the Gram matrix.
inline std::vector<double> gram_singular_values(const ComplexMatrix& a) {
  const Eigen::MatrixXcd m = to_eigen(a);
  const Eigen::MatrixXcd gram = m.rows() >= m.cols() ? Eigen::MatrixXcd(m.adjoint() * m)
                                                     : Eigen::MatrixXcd(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    out.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(k))));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace spectral::testing
