#include "spectral/eig_derivative.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

void require_unit_direction(std::span<const double> d) {
  double ssq = 0.0;
  for (double v : d) {
    if (!std::isfinite(v)) throw Error(ErrorCode::precondition, "direction has non-finite entry");
    ssq += v * v;
  }
  const double norm = std::sqrt(ssq);
  if (std::abs(norm - 1.0) > kUnitTol) {
    std::ostringstream msg;
    msg << "direction must have unit Euclidean norm, got " << norm;
    throw Error(ErrorCode::precondition, msg.str());
  }
}

std::vector<double> normalized(std::span<const double> d) {
  double ssq = 0.0;
  for (double v : d) ssq += v * v;
  const double norm = std::sqrt(ssq);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::precondition, "normalized: zero or non-finite direction");
  }
  std::vector<double> out(d.begin(), d.end());
  for (double& v : out) v /= norm;
  return out;
}

ComplexMatrix eigvec_block(const SpectralDecomposition& decomp, const ClusterIndex& c) {
  if (c.lo < 1 || c.hi < c.lo || c.hi > decomp.dim()) {
    throw Error(ErrorCode::dimension, "eigvec_block: cluster indices out of bounds");
  }
  return decomp.vectors.columns(c.lo - 1, c.r);
}

std::vector<std::string> cluster_warnings(const ClusterIndex& c, double gap_guard) {
  std::vector<std::string> warnings;
  if (gap_guard <= 10.0 * c.tol_used) {
    std::ostringstream msg;
    msg << "near_degenerate_cluster: gap guard " << gap_guard << " <= 10 * cluster_tol";
    warnings.push_back(msg.str());
  }
  if (c.width > c.tol_used) {
    std::ostringstream msg;
    msg << "chained_cluster_width: width " << c.width << " exceeds cluster_tol " << c.tol_used;
    warnings.push_back(msg.str());
  }
  return warnings;
}

ClusterFrame eig_cluster_frame(const MatrixFamily& family, std::span<const double> x0,
                               std::size_t m, std::optional<double> cluster_tol) {
  if (!family.is_hermitian()) {
    throw Error(ErrorCode::precondition, "eigenvalue derivatives require a Hermitian family");
  }
  const ComplexMatrix a = family.evaluate(x0);
  ClusterFrame frame;
  frame.decomposition = hermitian_eig(a);
  const double tol = cluster_tol.value_or(default_cluster_tol(a.frobenius_norm()));
  frame.cluster = locate_cluster(frame.decomposition.eigenvalues, m, tol);
  frame.basis = eigvec_block(frame.decomposition, frame.cluster);
  frame.gap_guard = cluster_gap_guard(frame.decomposition.eigenvalues, frame.cluster);
  frame.warnings = cluster_warnings(frame.cluster, frame.gap_guard);
  return frame;
}

ComplexMatrix compress_partials(const MatrixFamily& family, std::span<const double> x0,
                                const ComplexMatrix& basis, std::span<const double> weights) {
  if (basis.rows() != family.cols()) {
    throw Error(ErrorCode::dimension, "compress_partials: basis row count differs from family");
  }
  const ComplexMatrix g = family.directional_partial(x0, weights);
  return hermitian_part(adjoint_times(basis, g * basis));
}

ComplexMatrix build_f_prime(const MatrixFamily& family, std::span<const double> x0,
                            const ComplexMatrix& u2, std::span<const double> d) {
  if (!family.is_hermitian()) {
    throw Error(ErrorCode::precondition, "build_f_prime: family must be Hermitian");
  }
  require_unit_direction(d);
  return compress_partials(family, x0, u2, d);
}

DerivativeReport report_from_f_prime(const ClusterIndex& cluster, ComplexMatrix f_prime,
                                     std::span<const double> d, double gap_guard,
                                     std::vector<std::string> warnings) {
  DerivativeReport report;
  report.cluster = cluster;
  report.direction.assign(d.begin(), d.end());
  report.mu = hermitian_eig(f_prime).eigenvalues;
  report.f_prime = std::move(f_prime);
  report.selected_index = cluster.i;
  report.derivative = report.mu[cluster.i - 1];
  report.gap_guard = gap_guard;
  report.warnings = std::move(warnings);
  return report;
}

DerivativeReport eig_directional_derivative(const MatrixFamily& family,
                                            std::span<const double> x0, std::size_t m,
                                            std::span<const double> d,
                                            std::optional<double> cluster_tol) {
  require_unit_direction(d);
  ClusterFrame frame = eig_cluster_frame(family, x0, m, cluster_tol);
  ComplexMatrix f_prime = build_f_prime(family, x0, frame.basis, d);
  return report_from_f_prime(frame.cluster, std::move(f_prime), d, frame.gap_guard,
                             std::move(frame.warnings));
}

std::vector<DerivativeReport> eig_cluster_directional_derivatives(
    const MatrixFamily& family, std::span<const double> x0, std::size_t m,
    std::span<const double> d, std::optional<double> cluster_tol) {
  require_unit_direction(d);
  const ClusterFrame frame = eig_cluster_frame(family, x0, m, cluster_tol);
  const DerivativeReport shared =
      report_from_f_prime(frame.cluster, build_f_prime(family, x0, frame.basis, d), d,
                          frame.gap_guard, frame.warnings);

  std::vector<DerivativeReport> out;
  out.reserve(frame.cluster.r);
  for (std::size_t k = frame.cluster.lo; k <= frame.cluster.hi; ++k) {
    DerivativeReport member = shared;
    member.cluster.m = k;
    member.cluster.i = k - frame.cluster.lo + 1;
    member.cluster.j = frame.cluster.hi - k;
    member.cluster.value = frame.decomposition.eigenvalues[k - 1];
    member.selected_index = member.cluster.i;
    member.derivative = shared.mu[member.cluster.i - 1];
    out.push_back(std::move(member));
  }
  return out;
}

std::vector<double> cluster_sum_gradient(const MatrixFamily& family, std::span<const double> x0,
                                         std::size_t m, std::optional<double> cluster_tol) {
  const ClusterFrame frame = eig_cluster_frame(family, x0, m, cluster_tol);
  std::vector<double> gradient(family.param_dim());
  for (std::size_t j = 0; j < family.param_dim(); ++j) {
    const ComplexMatrix partial = family.partial(x0, j);
    gradient[j] = trace_hermitian(adjoint_times(frame.basis, partial * frame.basis));
  }
  return gradient;
}

}  // namespace spectral
