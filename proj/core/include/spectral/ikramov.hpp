#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/family.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

/// Q(ξ) = [[A, ξ₁I, (ξ₃ + iξ₄)I], [0, A, ξ₂I], [0, 0, A]] for square A, n ≥ 3.
ComplexMatrix build_q(const ComplexMatrix& a, std::span<const double> xi);

/// ξ ↦ Q(ξ) as a non-Hermitian family with p = 4 and constant partials.
MatrixFamily q_family(const ComplexMatrix& a);

/// f(ξ) = σ_{3n−2}(Q(ξ)).
double ikramov_f(const ComplexMatrix& a, std::span<const double> xi);

/// Position 3n − 2 of the singular value studied, for an n x n A.
inline std::size_t ikramov_index(std::size_t n) { return 3 * n - 2; }

enum class CriticalCase { decisive, dubious };

std::string_view critical_case_name(CriticalCase c);

/// Decisive iff p ≤ m − (p − 1).
CriticalCase classify_indices(std::size_t p, std::size_t m);

struct DirectionRecord {
  std::vector<double> d;
  std::vector<double> mu;  ///< eigenvalues of F′(d), non-increasing, length m
  double f_fwd = 0.0;      ///< μ_p(d): derivative of f along d
  double f_bwd = 0.0;      ///< −μ_{m−p+1}(d): derivative of f along −d
  double trace = 0.0;      ///< tr F′(d) = Σ μ_i(d)
  /// Derivative along −d computed independently through the reduced
  /// formula; absent for synthetic records.
  std::optional<double> direct_bwd;
  double reflection_delta = 0.0;  ///< |f_bwd − direct_bwd|
  bool antisymmetric = true;      ///< F′(−d) == −F′(d) entry for entry
};

/// Index arithmetic on a given μ list: f_fwd = μ_p, f_bwd = −μ_{m−p+1}.
DirectionRecord record_from_spectrum(std::vector<double> mu, std::size_t p);

struct CriticalPointAnalysis {
  std::vector<double> xi0;
  double sigma0 = 0.0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t m = 0;
  CriticalCase critical_case = CriticalCase::decisive;
  double check_tol = 0.0;
  std::vector<DirectionRecord> per_direction;
  std::vector<double> h_gradient;
  std::vector<double> trace_sums;
  /// Per-direction findings, e.g. an ascent direction refuting the local
  /// maximum hypothesis.
  std::vector<std::string> refutations;
  /// Decisive case only: "all_directional_derivatives_vanish" or
  /// "local_max_hypothesis_refuted". Dubious instances carry none.
  std::optional<std::string> conclusion;
  std::vector<std::string> warnings;
};

/// 1e-7 · max(1, σ₀).
double default_check_tol(double sigma0);

/// Applies the case split and sign tests to precomputed records. The
/// records' f_fwd and f_bwd are read as the two one-sided derivatives.
CriticalPointAnalysis assemble_analysis(std::size_t p, std::size_t q, double sigma0,
                                        std::vector<DirectionRecord> records, double check_tol);

/// Synthetic entry point: classify hand-built μ spectra (all of length m)
/// at cluster position p.
CriticalPointAnalysis classify_spectra(std::size_t p, const std::vector<std::vector<double>>& mus,
                                       double sigma0 = 1.0);

DirectionRecord analyze_direction_pair(const ComplexMatrix& a, std::span<const double> xi0,
                                       std::span<const double> d,
                                       std::optional<double> cluster_tol = std::nullopt);

/// ξ⁰ is taken as a candidate local maximiser; only necessary conditions
/// are checked and any contradiction is reported.
CriticalPointAnalysis classify_critical_point(const ComplexMatrix& a,
                                              std::span<const double> xi0,
                                              const std::vector<std::vector<double>>& directions,
                                              std::optional<double> cluster_tol = std::nullopt);

struct LevelFunctionReport {
  double h_value = 0.0;  ///< t(ξ⁰) − m σ₀
  std::vector<double> h_gradient;
  double sigma0 = 0.0;
  std::size_t multiplicity = 0;
};

LevelFunctionReport level_function_report(const ComplexMatrix& a, std::span<const double> xi0,
                                          std::optional<double> cluster_tol = std::nullopt);

struct MaximizerOptions {
  double radius = 0.0;  ///< grid half-width; 0 selects max(1, ‖A‖_F)
  int grid_points = 5;  ///< per axis, including both ends
  double min_step = 1e-9;
  int max_evaluations = 200000;
};

struct MaximizerResult {
  std::vector<double> xi;
  double value = 0.0;
  int evaluations = 0;
};

/// Coarse grid over [−R, R]⁴ followed by compass search on f. Finds a
/// numerical local maximiser; certifies nothing.
MaximizerResult maximize_ikramov_f(const ComplexMatrix& a, const MaximizerOptions& options = {});

}  // namespace spectral
