#include "spectral/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral/error.hpp"

namespace spectral {

namespace {

double checked(double v, const char* where) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::precondition, std::string(where) + ": non-finite function value");
  }
  return v;
}

void check_levels(double h0, int levels, const char* where) {
  if (!(h0 > 0.0)) throw Error(ErrorCode::precondition, std::string(where) + ": h0 must be positive");
  if (levels < 3) throw Error(ErrorCode::precondition, std::string(where) + ": need at least 3 levels");
}

// Neville-style table for samples at h_k = h0 / 2^k whose error expands in
// powers of h^order. Returns the diagonal entries T[k][k].
std::vector<double> richardson_diagonal(const std::vector<double>& samples, double order) {
  const std::size_t n = samples.size();
  std::vector<std::vector<double>> table(n);
  std::vector<double> diagonal(n);
  for (std::size_t k = 0; k < n; ++k) {
    table[k].resize(k + 1);
    table[k][0] = samples[k];
    for (std::size_t j = 1; j <= k; ++j) {
      const double factor = std::pow(2.0, order * static_cast<double>(j));
      table[k][j] = (factor * table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
    }
    diagonal[k] = table[k][k];
  }
  return diagonal;
}

}  // namespace

bool FDEstimate::trusted() const {
  return std::isfinite(extrapolated) &&
         stability_indicator <= 1e-3 * std::max(1.0, std::abs(extrapolated));
}

double default_fd_step(std::span<const double> x0) {
  double ssq = 0.0;
  for (double v : x0) ssq += v * v;
  return 1e-3 * std::max(1.0, std::sqrt(ssq));
}

FDEstimate fd_directional(const ScalarFunction& phi, std::span<const double> x0,
                          std::span<const double> d, double h0, int levels) {
  check_levels(h0, levels, "fd_directional");
  if (x0.size() != d.size()) {
    throw Error(ErrorCode::dimension, "fd_directional: point and direction sizes differ");
  }
  const double base = checked(phi(x0), "fd_directional");
  std::vector<double> point(x0.size());
  std::vector<double> quotients;
  FDEstimate est;
  double h = h0;
  for (int k = 0; k < levels; ++k, h *= 0.5) {
    for (std::size_t i = 0; i < x0.size(); ++i) point[i] = x0[i] + h * d[i];
    const double q = (checked(phi(point), "fd_directional") - base) / h;
    quotients.push_back(q);
    est.step_sequence.emplace_back(h, q);
  }
  const std::vector<double> diagonal = richardson_diagonal(quotients, 1.0);
  est.value = quotients.back();
  est.extrapolated = diagonal.back();
  const auto tail = std::span(diagonal).last(3);
  est.stability_indicator =
      *std::max_element(tail.begin(), tail.end()) - *std::min_element(tail.begin(), tail.end());
  return est;
}

std::vector<double> fd_gradient(const ScalarFunction& phi, std::span<const double> x0, double h0,
                                int levels) {
  check_levels(h0, levels, "fd_gradient");
  std::vector<double> gradient(x0.size());
  std::vector<double> point(x0.begin(), x0.end());
  for (std::size_t j = 0; j < x0.size(); ++j) {
    std::vector<double> central;
    double h = h0;
    for (int k = 0; k < levels; ++k, h *= 0.5) {
      point[j] = x0[j] + h;
      const double forward = checked(phi(point), "fd_gradient");
      point[j] = x0[j] - h;
      const double backward = checked(phi(point), "fd_gradient");
      central.push_back((forward - backward) / (2.0 * h));
    }
    point[j] = x0[j];
    gradient[j] = richardson_diagonal(central, 2.0).back();
  }
  return gradient;
}

}  // namespace spectral
