#include "spectral/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectral/error.hpp"

namespace spectral {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double ssq = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) ssq += std::norm(a(i, j));
  return std::sqrt(ssq);
}

// Annihilates a(p, q) with the unitary rotation
//   V = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]]  on the (p, q) plane,
// where e^{iφ} is the phase of a(p, q). Applies A ← V* A V and U ← U V.
void rotate(ComplexMatrix& a, ComplexMatrix& u, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase = apq / magnitude;
  const Complex s_phase = s * phase;
  const Complex s_conj = s * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s_conj * akq;
    a(k, q) = s_phase * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s_phase * aqk;
    a(q, k) = s_conj * apk + c * aqk;
  }
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex ukp = u(k, p);
    const Complex ukq = u(k, q);
    u(k, p) = c * ukp - s_conj * ukq;
    u(k, q) = s_phase * ukp + c * ukq;
  }
}

}  // namespace

SpectralDecomposition hermitian_eig(const ComplexMatrix& input, const JacobiOptions& options) {
  if (!(options.convergence_tol > 0.0)) {
    throw Error(ErrorCode::precondition, "hermitian_eig: convergence_tol must be positive");
  }
  const double defect = hermiticity_defect(input);
  const double scale = input.frobenius_norm();
  if (defect > options.hermit_tol * scale) {
    throw Error(ErrorCode::precondition,
                "hermitian_eig: matrix is not Hermitian (defect " + std::to_string(defect) +
                    ", norm " + std::to_string(scale) + ")");
  }

  ComplexMatrix a = hermitian_part(input);
  const std::size_t n = a.rows();
  ComplexMatrix u = ComplexMatrix::identity(n);

  const double target = options.convergence_tol * scale;
  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, u, p, q);
  }
  if (!converged) {
    throw Error(ErrorCode::convergence,
                "hermitian_eig: no convergence after " + std::to_string(options.max_sweeps) +
                    " sweeps, off-diagonal residual " + std::to_string(off_diagonal_norm(a)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return a(lhs, lhs).real() > a(rhs, rhs).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = u(i, order[k]);
  }
  return out;
}

}  // namespace spectral
