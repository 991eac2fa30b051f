#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spectral/error.hpp"
#include "spectral/hermitian_eig.hpp"
#include "support/eigen_oracle.hpp"
#include "support/generators.hpp"

using namespace spectral;

namespace {

const Complex I{0.0, 1.0};

double orthonormality_residual(const ComplexMatrix& u) {
  return (adjoint_times(u, u) - ComplexMatrix::identity(u.cols())).frobenius_norm();
}

double reconstruction_residual(const ComplexMatrix& a, const SpectralDecomposition& d) {
  return (d.vectors * ComplexMatrix::diagonal(d.eigenvalues) * d.vectors.adjoint() - a)
      .frobenius_norm();
}

}  // namespace

TEST_CASE("Kato matrix at (3, 4) has eigenvalues 5 and -5") {
  const auto d = hermitian_eig(ComplexMatrix::from_rows({{3.0, 4.0 * I}, {-4.0 * I, -3.0}}));
  REQUIRE(d.dim() == 2);
  CHECK(d.eigenvalues[0] == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(d.eigenvalues[1] == doctest::Approx(-5.0).epsilon(1e-14));
}

TEST_CASE("identity keeps a repeated eigenvalue") {
  const auto d = hermitian_eig(ComplexMatrix::identity(2));
  CHECK(d.eigenvalues == std::vector<double>{1.0, 1.0});
  CHECK(orthonormality_residual(d.vectors) <= 1e-15);
}

TEST_CASE("[[2,1],[1,2]] has eigenvalues 3 and 1") {
  const auto d = hermitian_eig(ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}}));
  CHECK(d.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zero matrix") {
  const auto d = hermitian_eig(ComplexMatrix(3, 3));
  CHECK(d.eigenvalues == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(d.vectors == ComplexMatrix::identity(3));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), Error);
  try {
    hermitian_eig(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
  JacobiOptions starved;
  starved.max_sweeps = 0;
  testing::Rng rng(3);
  try {
    hermitian_eig(testing::random_hermitian(rng, 6), starved);
    FAIL("expected convergence error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::convergence);
  }
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::identity(2), -1.0), Error);
}

TEST_CASE("random Hermitian matrices: residuals, ordering, oracle agreement") {
  testing::Rng rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.index(1, 32);
    const ComplexMatrix a = testing::random_hermitian(rng, n);
    const double scale = a.frobenius_norm();
    const auto d = hermitian_eig(a);
    CAPTURE(n);
    CHECK(std::is_sorted(d.eigenvalues.begin(), d.eigenvalues.end(), std::greater<>()));
    CHECK(reconstruction_residual(a, d) <= 1e-12 * n * scale);
    CHECK(orthonormality_residual(d.vectors) <= 1e-12 * n);

    const auto reference = testing::reference_eigenvalues(a);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(d.eigenvalues[k] - reference[k]) <= 1e-12 * scale);

    double sum = 0.0;
    for (double v : d.eigenvalues) sum += v;
    CHECK(std::abs(trace_hermitian(a) - sum) <= 1e-10 * n * scale);
  }
}

TEST_CASE("spectrum is invariant under unitary similarity") {
  testing::Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(2, 16);
    const ComplexMatrix a = testing::random_hermitian(rng, n);
    const ComplexMatrix p = testing::random_unitary(rng, n);
    const auto lhs = hermitian_eig(a).eigenvalues;
    const auto rhs = hermitian_eig(hermitian_part(p.adjoint() * a * p)).eigenvalues;
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-10);
  }
}

TEST_CASE("engineered degeneracy: eigenspace residual") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix p = testing::random_unitary(rng, 3);
    const std::vector<double> levels = {2.0, 2.0, 1.0};
    const ComplexMatrix a = hermitian_part(p * ComplexMatrix::diagonal(levels) * p.adjoint());
    const auto d = hermitian_eig(a);
    CHECK(d.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(d.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-13));
    const ComplexMatrix u2 = d.vectors.columns(0, 2);
    CHECK((a * u2 - 2.0 * u2).frobenius_norm() <= 1e-9);
  }
}
