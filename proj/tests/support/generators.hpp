#pragma once

// Random instance generators shared by unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "spectral/family.hpp"
#include "spectral/matrix.hpp"

namespace spectral::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  Complex complex() { return {uniform(), uniform()}; }

 private:
  std::mt19937_64 engine_;
};

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rng.complex();
  return out;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = rng.uniform();
    for (std::size_t j = i + 1; j < n; ++j) {
      out(i, j) = rng.complex();
      out(j, i) = std::conj(out(i, j));
    }
  }
  return out;
}

/// Modified Gram-Schmidt on the columns of a random complex matrix.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix q = random_matrix(rng, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t prev = 0; prev < k; ++prev) {
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, prev)) * q(i, k);
        for (std::size_t i = 0; i < n; ++i) q(i, k) -= dot * q(i, prev);
      }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= norm;
  }
  return q;
}

/// Diagonal values with at least one repeated level: levels are distinct
/// integers in [−4, 4] scaled by 0.5, multiplicities random.
inline std::vector<double> degenerate_levels(Rng& rng, std::size_t n) {
  std::vector<int> pool = {-4, -3, -2, -1, 0, 1, 2, 3, 4};
  for (std::size_t i = pool.size() - 1; i > 0; --i) std::swap(pool[i], pool[rng.index(0, i)]);
  std::vector<double> values;
  std::size_t level = 0;
  const std::size_t first_mult = rng.index(2, std::min<std::size_t>(n, 3));
  for (std::size_t k = 0; k < first_mult; ++k) values.push_back(0.5 * pool[level]);
  ++level;
  while (values.size() < n) {
    const std::size_t mult = std::min(rng.index(1, 3), n - values.size());
    for (std::size_t k = 0; k < mult; ++k) values.push_back(0.5 * pool[level]);
    ++level;
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

struct DegenerateHermitianCase {
  AffineFamily payload;
  std::vector<double> x0;
  std::vector<double> levels;  ///< exact spectrum of A(x0)
};

/// A(x) = base + Σ x_j B_j with A(x0) = P diag(levels) P*, P random unitary.
inline DegenerateHermitianCase degenerate_hermitian_family(Rng& rng, std::size_t n, std::size_t p) {
  DegenerateHermitianCase out;
  out.levels = degenerate_levels(rng, n);
  const ComplexMatrix u = random_unitary(rng, n);
  ComplexMatrix anchor = hermitian_part(u * ComplexMatrix::diagonal(out.levels) * u.adjoint());
  out.x0.resize(p);
  for (double& v : out.x0) v = rng.uniform();
  for (std::size_t j = 0; j < p; ++j) {
    out.payload.coefficients.push_back(random_hermitian(rng, n));
    anchor -= out.x0[j] * out.payload.coefficients.back();
  }
  out.payload.base = hermitian_part(anchor);
  out.payload.hermitian = true;
  return out;
}

struct DegenerateRectangularCase {
  AffineFamily payload;
  std::vector<double> x0;
  std::vector<double> sigma;  ///< exact singular values of A(x0)
};

/// A(x0) = P diag(sigma) Q* with a repeated positive leading value.
inline DegenerateRectangularCase degenerate_rectangular_family(Rng& rng, std::size_t rows,
                                                               std::size_t cols, std::size_t p) {
  DegenerateRectangularCase out;
  const std::size_t q = std::min(rows, cols);
  const std::size_t mult = std::min<std::size_t>(q, rng.index(2, 3));
  const double top = 2.0;
  for (std::size_t k = 0; k < mult; ++k) out.sigma.push_back(top);
  double next = 1.5;
  while (out.sigma.size() < q) {
    out.sigma.push_back(next);
    next -= 0.4;
  }
  ComplexMatrix core(rows, cols);
  for (std::size_t k = 0; k < q; ++k) core(k, k) = out.sigma[k];
  ComplexMatrix anchor = random_unitary(rng, rows) * core * random_unitary(rng, cols).adjoint();
  out.x0.resize(p);
  for (double& v : out.x0) v = rng.uniform();
  for (std::size_t j = 0; j < p; ++j) {
    out.payload.coefficients.push_back(random_matrix(rng, rows, cols));
    anchor -= out.x0[j] * out.payload.coefficients.back();
  }
  out.payload.base = anchor;
  out.payload.hermitian = false;
  return out;
}

inline std::vector<double> random_unit(Rng& rng, std::size_t dim) {
  for (;;) {
    std::vector<double> d(dim);
    double ssq = 0.0;
    for (double& v : d) {
      v = rng.uniform();
      ssq += v * v;
    }
    if (ssq < 0.01 || ssq > 1.0) continue;
    for (double& v : d) v /= std::sqrt(ssq);
    return d;
  }
}

}  // namespace spectral::testing
