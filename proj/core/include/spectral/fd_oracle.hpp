#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace spectral {

using ScalarFunction = std::function<double(std::span<const double>)>;

/// Richardson-extrapolated finite-difference estimate.
struct FDEstimate {
  double value = 0.0;  ///< raw quotient at the smallest step
  std::vector<std::pair<double, double>> step_sequence;  ///< (h, quotient), h decreasing
  double extrapolated = 0.0;
  double stability_indicator = 0.0;  ///< spread of the last three diagonal extrapolants

  /// stability_indicator ≤ 1e-3 · max(1, |extrapolated|).
  bool trusted() const;
};

/// 1e-3 · max(1, ‖x₀‖₂).
double default_fd_step(std::span<const double> x0);

inline constexpr int kDefaultFdLevels = 6;

/// One-sided limit of (φ(x₀ + h d) − φ(x₀)) / h as h → 0⁺, sampled at
/// h0 · 2^{-k} for k = 0..levels−1 and extrapolated under an error model
/// c₁h + c₂h² + … .
FDEstimate fd_directional(const ScalarFunction& phi, std::span<const double> x0,
                          std::span<const double> d, double h0, int levels = kDefaultFdLevels);

/// Central differences per coordinate, extrapolated in h².
std::vector<double> fd_gradient(const ScalarFunction& phi, std::span<const double> x0, double h0,
                                int levels = kDefaultFdLevels);

}  // namespace spectral
