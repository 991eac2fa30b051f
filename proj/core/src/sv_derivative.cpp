#include "spectral/sv_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

ComplexMatrix wielandt_embed(const ComplexMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix out(m + n, m + n);
  out.set_block(0, m, a);
  out.set_block(m, 0, a.adjoint());
  return out;
}

MatrixFamily wielandt_family(const MatrixFamily& family) {
  const std::size_t dim = family.rows() + family.cols();
  return MatrixFamily(
      family.param_dim(), dim, dim, true,
      [family](std::span<const double> x) { return wielandt_embed(family.evaluate(x)); },
      [family](std::span<const double> x, std::size_t j) {
        return wielandt_embed(family.partial(x, j));
      },
      family.domain());
}

SingularDecomposition sv_decomposition(const ComplexMatrix& a) {
  SingularDecomposition out;
  out.rows = a.rows();
  out.cols = a.cols();
  out.embedding = hermitian_eig(wielandt_embed(a));
  const std::size_t q = std::min(out.rows, out.cols);
  out.sigma.resize(q);
  for (std::size_t k = 0; k < q; ++k) out.sigma[k] = std::max(0.0, out.embedding.eigenvalues[k]);
  return out;
}

double sigma_floor(const ComplexMatrix& a) { return 1e-6 * a.frobenius_norm(); }

SvFrame sv_cluster_frame(const MatrixFamily& family, std::span<const double> x0, std::size_t k,
                         std::optional<double> cluster_tol) {
  const ComplexMatrix a = family.evaluate(x0);
  SvFrame frame;
  frame.svd = sv_decomposition(a);
  const std::size_t q = frame.svd.q();
  if (k < 1 || k > q) {
    throw Error(ErrorCode::dimension, "singular value index " + std::to_string(k) +
                                          " outside 1.." + std::to_string(q));
  }
  frame.floor = sigma_floor(a);
  if (frame.svd.sigma[k - 1] <= frame.floor) {
    std::ostringstream msg;
    msg << "sigma_at_zero: sigma_" << k << " = " << frame.svd.sigma[k - 1]
        << " is within the floor " << frame.floor;
    throw Error(ErrorCode::sigma_at_zero, msg.str());
  }
  const auto& spectrum = frame.svd.embedding.eigenvalues;
  const double tol = cluster_tol.value_or(default_cluster_tol(std::sqrt(2.0) * a.frobenius_norm()));
  frame.cluster = locate_cluster(spectrum, k, tol);
  if (frame.cluster.hi > q) {
    throw Error(ErrorCode::sigma_at_zero,
                "sigma_at_zero: cluster of sigma_" + std::to_string(k) +
                    " extends into the zero block of the embedding");
  }
  frame.w2 = eigvec_block(frame.svd.embedding, frame.cluster);
  frame.gap_guard = cluster_gap_guard(spectrum, frame.cluster);
  frame.warnings = cluster_warnings(frame.cluster, frame.gap_guard);
  return frame;
}

ComplexMatrix sv_f_prime_embedding(const MatrixFamily& family, std::span<const double> x0,
                                   const SvFrame& frame, std::span<const double> d) {
  require_unit_direction(d);
  const ComplexMatrix g = wielandt_embed(family.directional_partial(x0, d));
  return hermitian_part(adjoint_times(frame.w2, g * frame.w2));
}

ComplexMatrix sv_f_prime_reduced(const MatrixFamily& family, std::span<const double> x0,
                                 const SvFrame& frame, std::span<const double> d) {
  require_unit_direction(d);
  const ComplexMatrix g = family.directional_partial(x0, d);
  const ComplexMatrix u2 = frame.svd.u_block(frame.w2);
  const ComplexMatrix v2 = frame.svd.v_block(frame.w2);
  const ComplexMatrix half = adjoint_times(u2, g * v2);
  return half + half.adjoint();
}

DerivativeReport sv_directional_derivative(const MatrixFamily& family,
                                           std::span<const double> x0, std::size_t k,
                                           std::span<const double> d,
                                           std::optional<double> cluster_tol) {
  require_unit_direction(d);
  SvFrame frame = sv_cluster_frame(family, x0, k, cluster_tol);
  DerivativeReport report =
      report_from_f_prime(frame.cluster, sv_f_prime_embedding(family, x0, frame, d), d,
                          frame.gap_guard, std::move(frame.warnings));
  report.path = "embedding";
  return report;
}

DerivativeReport sv_derivative_reduced(const MatrixFamily& family, std::span<const double> x0,
                                       std::size_t k, std::span<const double> d,
                                       std::optional<double> cluster_tol) {
  require_unit_direction(d);
  SvFrame frame = sv_cluster_frame(family, x0, k, cluster_tol);
  DerivativeReport report =
      report_from_f_prime(frame.cluster, sv_f_prime_reduced(family, x0, frame, d), d,
                          frame.gap_guard, std::move(frame.warnings));
  report.path = "reduced";
  return report;
}

std::vector<double> sv_cluster_sum_gradient(const MatrixFamily& family,
                                            std::span<const double> x0, std::size_t k,
                                            std::optional<double> cluster_tol) {
  const SvFrame frame = sv_cluster_frame(family, x0, k, cluster_tol);
  std::vector<double> gradient(family.param_dim());
  for (std::size_t j = 0; j < family.param_dim(); ++j) {
    const ComplexMatrix partial = wielandt_embed(family.partial(x0, j));
    gradient[j] = trace_hermitian(adjoint_times(frame.w2, partial * frame.w2));
  }
  return gradient;
}

}  // namespace spectral
