#include <cmath>

#include "doctest.h"
#include "spectral/error.hpp"
#include "spectral/matrix.hpp"
#include "support/generators.hpp"

using namespace spectral;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("hermiticity_defect") {
  CHECK(hermiticity_defect(ComplexMatrix::from_rows({{0.0, I}, {-I, 0.0}})) == 0.0);
  CHECK(hermiticity_defect(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hermiticity_defect(ComplexMatrix::identity(3)) == 0.0);
  CHECK_THROWS_AS(hermiticity_defect(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("trace_hermitian") {
  CHECK(trace_hermitian(ComplexMatrix::identity(4)) == 4.0);
  CHECK(trace_hermitian(ComplexMatrix::from_rows({{1.0, I}, {-I, -1.0}})) == 0.0);
  CHECK_THROWS_AS(trace_hermitian(ComplexMatrix(3, 2)), Error);

  ComplexMatrix skew = ComplexMatrix::identity(2);
  skew(0, 0) = Complex{1.0, 0.5};
  try {
    trace_hermitian(skew);
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
}

TEST_CASE("construction rejects bad shapes and non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(0, 2), Error);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{NAN, 0.0}}), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{0.0, INFINITY}}), Error);
}

TEST_CASE("products agree with the adjoint identity (AB)* = B*A*") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = testing::random_matrix(rng, 3, 5);
    const ComplexMatrix b = testing::random_matrix(rng, 5, 2);
    const ComplexMatrix lhs = (a * b).adjoint();
    const ComplexMatrix rhs = b.adjoint() * a.adjoint();
    CHECK((lhs - rhs).frobenius_norm() <= 1e-14);
    CHECK((adjoint_times(a.adjoint(), b) - a * b).frobenius_norm() <= 1e-14);
  }
}

TEST_CASE("blocks") {
  ComplexMatrix m(4, 4);
  m.set_block(1, 2, ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, I}}));
  CHECK(m(1, 2) == Complex{1.0});
  CHECK(m(2, 3) == I);
  CHECK(m.block(1, 2, 2, 2) == ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, I}}));
  CHECK(m.columns(3, 1)(2, 0) == I);
  CHECK_THROWS_AS(m.block(3, 3, 2, 2), Error);
}

TEST_CASE("frobenius norm survives extreme scales") {
  ComplexMatrix big(1, 2, {Complex{1e200, 0.0}, Complex{0.0, 1e200}});
  CHECK(big.frobenius_norm() == doctest::Approx(std::sqrt(2.0) * 1e200));
  ComplexMatrix tiny(1, 2, {Complex{3e-200, 0.0}, Complex{0.0, 4e-200}});
  CHECK(tiny.frobenius_norm() == doctest::Approx(5e-200));
}
