#include "spectral/ikramov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "spectral/error.hpp"
#include "spectral/hermitian_eig.hpp"
#include "spectral/sv_derivative.hpp"

namespace spectral {

namespace {

void require_q_input(const ComplexMatrix& a) {
  if (!a.is_square() || a.rows() < 3) {
    throw Error(ErrorCode::dimension, "Q(xi) needs a square matrix with n >= 3, got " +
                                          std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()));
  }
}

void require_xi(std::span<const double> xi) {
  if (xi.size() != 4) {
    throw Error(ErrorCode::dimension, "xi must have 4 components, got " +
                                          std::to_string(xi.size()));
  }
}

ComplexMatrix scaled_identity_block(std::size_t n, std::size_t block_row, std::size_t block_col,
                                    Complex s) {
  ComplexMatrix out(3 * n, 3 * n);
  for (std::size_t i = 0; i < n; ++i) out(block_row * n + i, block_col * n + i) = s;
  return out;
}

double sum(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

}  // namespace

ComplexMatrix build_q(const ComplexMatrix& a, std::span<const double> xi) {
  require_q_input(a);
  require_xi(xi);
  const std::size_t n = a.rows();
  ComplexMatrix q(3 * n, 3 * n);
  for (std::size_t b = 0; b < 3; ++b) q.set_block(b * n, b * n, a);
  const Complex corner{xi[2], xi[3]};
  for (std::size_t i = 0; i < n; ++i) {
    q(i, n + i) = xi[0];
    q(i, 2 * n + i) = corner;
    q(n + i, 2 * n + i) = xi[1];
  }
  return q;
}

MatrixFamily q_family(const ComplexMatrix& a) {
  require_q_input(a);
  const std::size_t n = a.rows();
  std::vector<ComplexMatrix> partials = {
      scaled_identity_block(n, 0, 1, 1.0),
      scaled_identity_block(n, 1, 2, 1.0),
      scaled_identity_block(n, 0, 2, 1.0),
      scaled_identity_block(n, 0, 2, Complex{0.0, 1.0}),
  };
  return MatrixFamily(
      4, 3 * n, 3 * n, false, [a](std::span<const double> xi) { return build_q(a, xi); },
      [partials = std::move(partials)](std::span<const double>, std::size_t j) {
        return partials[j];
      });
}

double ikramov_f(const ComplexMatrix& a, std::span<const double> xi) {
  const ComplexMatrix q = build_q(a, xi);
  return sv_decomposition(q).sigma[ikramov_index(a.rows()) - 1];
}

std::string_view critical_case_name(CriticalCase c) {
  return c == CriticalCase::decisive ? "Decisive" : "Dubious";
}

CriticalCase classify_indices(std::size_t p, std::size_t m) {
  if (p < 1 || p > m) {
    throw Error(ErrorCode::precondition, "classify_indices: need 1 <= p <= m");
  }
  return p <= m - (p - 1) ? CriticalCase::decisive : CriticalCase::dubious;
}

DirectionRecord record_from_spectrum(std::vector<double> mu, std::size_t p) {
  const std::size_t m = mu.size();
  if (p < 1 || p > m) {
    throw Error(ErrorCode::precondition, "record_from_spectrum: need 1 <= p <= m");
  }
  if (!std::is_sorted(mu.begin(), mu.end(), std::greater<>())) {
    throw Error(ErrorCode::precondition, "record_from_spectrum: mu must be non-increasing");
  }
  DirectionRecord r;
  r.f_fwd = mu[p - 1];
  r.f_bwd = -mu[m - p];
  r.trace = sum(mu);
  r.mu = std::move(mu);
  return r;
}

double default_check_tol(double sigma0) { return 1e-7 * std::max(1.0, sigma0); }

CriticalPointAnalysis assemble_analysis(std::size_t p, std::size_t q, double sigma0,
                                        std::vector<DirectionRecord> records, double check_tol) {
  CriticalPointAnalysis out;
  out.sigma0 = sigma0;
  out.p = p;
  out.q = q;
  out.m = p + q;
  out.critical_case = classify_indices(p, out.m);
  out.check_tol = check_tol;

  const bool decisive = out.critical_case == CriticalCase::decisive;
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const DirectionRecord& r = records[idx];
    if (r.mu.size() != out.m) {
      throw Error(ErrorCode::dimension, "assemble_analysis: record has wrong mu length");
    }
    out.trace_sums.push_back(r.trace);
    std::ostringstream msg;
    msg.precision(17);
    if (r.f_fwd > check_tol) {
      msg << "direction " << idx << ": ascent along d (f' = " << r.f_fwd << ")";
    } else if (r.f_bwd > check_tol) {
      msg << "direction " << idx << ": ascent along -d (f' = " << r.f_bwd << ")";
    } else if (decisive && (r.f_fwd < -check_tol || r.f_bwd < -check_tol)) {
      msg << "direction " << idx << ": decisive case forces f'(+-d) = 0, got (" << r.f_fwd
          << ", " << r.f_bwd << ")";
    }
    if (!msg.str().empty()) out.refutations.push_back(msg.str());
  }
  if (decisive) {
    out.conclusion = out.refutations.empty() ? "all_directional_derivatives_vanish"
                                             : "local_max_hypothesis_refuted";
  }
  out.per_direction = std::move(records);
  return out;
}

CriticalPointAnalysis classify_spectra(std::size_t p, const std::vector<std::vector<double>>& mus,
                                       double sigma0) {
  if (mus.empty()) throw Error(ErrorCode::precondition, "classify_spectra: no spectra given");
  const std::size_t m = mus.front().size();
  if (p < 1 || p > m) throw Error(ErrorCode::precondition, "classify_spectra: need 1 <= p <= m");
  std::vector<DirectionRecord> records;
  for (const auto& mu : mus) records.push_back(record_from_spectrum(mu, p));
  return assemble_analysis(p, m - p, sigma0, std::move(records), default_check_tol(sigma0));
}

namespace {

DirectionRecord analyze_with_frame(const MatrixFamily& family, std::span<const double> xi0,
                                   const SvFrame& frame, std::span<const double> d) {
  const ComplexMatrix forward = sv_f_prime_embedding(family, xi0, frame, d);
  std::vector<double> negated(d.begin(), d.end());
  for (double& v : negated) v = -v;
  const ComplexMatrix backward = sv_f_prime_embedding(family, xi0, frame, negated);

  DirectionRecord r = record_from_spectrum(hermitian_eig(forward).eigenvalues, frame.cluster.i);
  r.d.assign(d.begin(), d.end());
  r.antisymmetric = backward == -forward;
  const std::vector<double> alpha =
      hermitian_eig(sv_f_prime_reduced(family, xi0, frame, negated)).eigenvalues;
  r.direct_bwd = alpha[frame.cluster.i - 1];
  r.reflection_delta = std::abs(r.f_bwd - *r.direct_bwd);
  return r;
}

}  // namespace

DirectionRecord analyze_direction_pair(const ComplexMatrix& a, std::span<const double> xi0,
                                       std::span<const double> d,
                                       std::optional<double> cluster_tol) {
  require_xi(xi0);
  require_unit_direction(d);
  const MatrixFamily family = q_family(a);
  const SvFrame frame = sv_cluster_frame(family, xi0, ikramov_index(a.rows()), cluster_tol);
  return analyze_with_frame(family, xi0, frame, d);
}

CriticalPointAnalysis classify_critical_point(const ComplexMatrix& a,
                                              std::span<const double> xi0,
                                              const std::vector<std::vector<double>>& directions,
                                              std::optional<double> cluster_tol) {
  require_xi(xi0);
  if (directions.empty()) {
    throw Error(ErrorCode::precondition, "classify_critical_point: no directions given");
  }
  for (const auto& d : directions) require_unit_direction(d);
  const MatrixFamily family = q_family(a);
  const std::size_t k = ikramov_index(a.rows());
  const SvFrame frame = sv_cluster_frame(family, xi0, k, cluster_tol);

  std::vector<DirectionRecord> records;
  records.reserve(directions.size());
  for (const auto& d : directions) records.push_back(analyze_with_frame(family, xi0, frame, d));

  const double sigma0 = frame.svd.sigma[k - 1];
  CriticalPointAnalysis out = assemble_analysis(frame.cluster.i, frame.cluster.j, sigma0,
                                                std::move(records), default_check_tol(sigma0));
  out.xi0.assign(xi0.begin(), xi0.end());
  out.warnings = frame.warnings;
  out.h_gradient = sv_cluster_sum_gradient(family, xi0, k, cluster_tol);
  return out;
}

LevelFunctionReport level_function_report(const ComplexMatrix& a, std::span<const double> xi0,
                                          std::optional<double> cluster_tol) {
  require_xi(xi0);
  const MatrixFamily family = q_family(a);
  const std::size_t k = ikramov_index(a.rows());
  const SvFrame frame = sv_cluster_frame(family, xi0, k, cluster_tol);
  LevelFunctionReport out;
  out.sigma0 = frame.svd.sigma[k - 1];
  out.multiplicity = frame.cluster.r;
  const auto cluster_values =
      std::span(frame.svd.sigma).subspan(frame.cluster.lo - 1, frame.cluster.r);
  out.h_value = sum(cluster_values) - static_cast<double>(out.multiplicity) * out.sigma0;
  out.h_gradient = sv_cluster_sum_gradient(family, xi0, k, cluster_tol);
  return out;
}

MaximizerResult maximize_ikramov_f(const ComplexMatrix& a, const MaximizerOptions& options) {
  require_q_input(a);
  if (options.grid_points < 2) {
    throw Error(ErrorCode::precondition, "maximize_ikramov_f: need at least 2 grid points");
  }
  const double radius = options.radius > 0.0 ? options.radius : std::max(1.0, a.frobenius_norm());
  MaximizerResult best;
  best.value = -1.0;
  std::vector<double> xi(4);
  auto evaluate = [&](std::span<const double> point) {
    ++best.evaluations;
    return ikramov_f(a, point);
  };

  const int g = options.grid_points;
  const double spacing = 2.0 * radius / (g - 1);
  for (int i0 = 0; i0 < g; ++i0)
    for (int i1 = 0; i1 < g; ++i1)
      for (int i2 = 0; i2 < g; ++i2)
        for (int i3 = 0; i3 < g; ++i3) {
          xi = {-radius + i0 * spacing, -radius + i1 * spacing, -radius + i2 * spacing,
                -radius + i3 * spacing};
          const double v = evaluate(xi);
          if (v > best.value) {
            best.value = v;
            best.xi = xi;
          }
        }

  double step = spacing;
  while (step >= options.min_step && best.evaluations < options.max_evaluations) {
    bool improved = false;
    for (std::size_t axis = 0; axis < 4 && !improved; ++axis) {
      for (double sign : {1.0, -1.0}) {
        xi = best.xi;
        xi[axis] += sign * step;
        const double v = evaluate(xi);
        if (v > best.value) {
          best.value = v;
          best.xi = xi;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace spectral
