#include "spectral/family.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

bool Box::contains(std::span<const double> x) const {
  if (x.size() != lower.size() || x.size() != upper.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  return true;
}

MatrixFamily::MatrixFamily(std::size_t param_dim, std::size_t rows, std::size_t cols,
                           bool hermitian, Evaluator evaluator, Partial partial,
                           std::optional<Box> domain)
    : param_dim_(param_dim),
      rows_(rows),
      cols_(cols),
      hermitian_(hermitian),
      evaluator_(std::move(evaluator)),
      partial_(std::move(partial)),
      domain_(std::move(domain)) {
  if (param_dim_ == 0) {
    throw Error(ErrorCode::dimension, "MatrixFamily: at least one parameter is required");
  }
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::dimension, "MatrixFamily: matrix dimensions must be positive");
  }
  if (hermitian_ && rows_ != cols_) {
    throw Error(ErrorCode::dimension, "MatrixFamily: a Hermitian family must be square");
  }
  if (!evaluator_ || !partial_) {
    throw Error(ErrorCode::precondition, "MatrixFamily: evaluator and partials are required");
  }
  if (domain_) {
    if (domain_->lower.size() != param_dim_ || domain_->upper.size() != param_dim_) {
      throw Error(ErrorCode::dimension, "MatrixFamily: domain box has wrong dimension");
    }
    for (std::size_t i = 0; i < param_dim_; ++i)
      if (!(domain_->lower[i] < domain_->upper[i])) {
        throw Error(ErrorCode::domain, "MatrixFamily: empty domain box");
      }
  }
}

void MatrixFamily::check_point(std::span<const double> x) const {
  if (x.size() != param_dim_) {
    throw Error(ErrorCode::dimension, "MatrixFamily: point has dimension " +
                                          std::to_string(x.size()) + ", expected " +
                                          std::to_string(param_dim_));
  }
  for (double v : x)
    if (!std::isfinite(v)) throw Error(ErrorCode::domain, "MatrixFamily: non-finite point");
  if (domain_ && !domain_->contains(x)) {
    throw Error(ErrorCode::domain, "MatrixFamily: point outside the declared domain");
  }
}

void MatrixFamily::check_shape(const ComplexMatrix& m, const char* what) const {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw Error(ErrorCode::dimension, std::string("MatrixFamily: ") + what +
                                          " returned the wrong shape");
  }
}

ComplexMatrix MatrixFamily::evaluate(std::span<const double> x) const {
  check_point(x);
  ComplexMatrix out = evaluator_(x);
  check_shape(out, "evaluator");
  return out;
}

ComplexMatrix MatrixFamily::partial(std::span<const double> x, std::size_t j) const {
  check_point(x);
  if (j >= param_dim_) {
    throw Error(ErrorCode::dimension, "MatrixFamily: partial index " + std::to_string(j) +
                                          " out of range for p = " + std::to_string(param_dim_));
  }
  ComplexMatrix out = partial_(x, j);
  check_shape(out, "partial");
  return out;
}

ComplexMatrix MatrixFamily::directional_partial(std::span<const double> x,
                                                std::span<const double> weights) const {
  if (weights.size() != param_dim_) {
    throw Error(ErrorCode::dimension, "MatrixFamily: direction has dimension " +
                                          std::to_string(weights.size()) + ", expected " +
                                          std::to_string(param_dim_));
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t j = 0; j < param_dim_; ++j) {
    if (weights[j] == 0.0) continue;
    out += weights[j] * partial(x, j);
  }
  return out;
}

bool is_hermitian_within_tol(const ComplexMatrix& a) {
  return a.is_square() && hermiticity_defect(a) <= kHermitTol * a.frobenius_norm();
}

namespace {

MatrixFamily build_affine(const ComplexMatrix& base, std::vector<ComplexMatrix> coefficients,
                          std::optional<Box> domain, bool allow_hermitian) {
  if (base.empty()) throw Error(ErrorCode::dimension, "make_affine: empty base matrix");
  if (coefficients.empty()) {
    throw Error(ErrorCode::dimension, "make_affine: at least one coefficient matrix required");
  }
  bool hermitian = allow_hermitian && is_hermitian_within_tol(base);
  for (const auto& c : coefficients) {
    if (c.rows() != base.rows() || c.cols() != base.cols()) {
      throw Error(ErrorCode::dimension, "make_affine: coefficient shape differs from base");
    }
    hermitian = hermitian && is_hermitian_within_tol(c);
  }
  const std::size_t p = coefficients.size();
  const std::size_t rows = base.rows();
  const std::size_t cols = base.cols();
  auto evaluator = [base, coefficients](std::span<const double> x) {
    ComplexMatrix out = base;
    for (std::size_t j = 0; j < coefficients.size(); ++j)
      if (x[j] != 0.0) out += x[j] * coefficients[j];
    return out;
  };
  auto partial = [coefficients = std::move(coefficients)](std::span<const double>,
                                                          std::size_t j) {
    return coefficients[j];
  };
  return MatrixFamily(p, rows, cols, hermitian, std::move(evaluator), std::move(partial),
                      std::move(domain));
}

}  // namespace

MatrixFamily make_affine(const ComplexMatrix& base, std::vector<ComplexMatrix> coefficients,
                         std::optional<Box> domain) {
  return build_affine(base, std::move(coefficients), std::move(domain), true);
}

MatrixFamily make_affine(const AffineFamily& payload) {
  MatrixFamily family =
      build_affine(payload.base, payload.coefficients, payload.domain, payload.hermitian);
  if (payload.hermitian && !family.is_hermitian()) {
    throw Error(ErrorCode::precondition,
                "make_affine: family declared Hermitian but base or coefficients are not");
  }
  return family;
}

MatrixFamily kato_family() {
  const Complex i{0.0, 1.0};
  const ComplexMatrix b1 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  const ComplexMatrix b2 = ComplexMatrix::from_rows({{0.0, i}, {-i, 0.0}});
  return make_affine(ComplexMatrix(2, 2), {b1, b2});
}

double fd_partial_check(const MatrixFamily& family, std::span<const double> x0, std::size_t j,
                        double h) {
  if (j >= family.param_dim()) {
    throw Error(ErrorCode::dimension, "fd_partial_check: index out of range");
  }
  if (!(h > 0.0)) throw Error(ErrorCode::precondition, "fd_partial_check: h must be positive");
  std::vector<double> plus(x0.begin(), x0.end());
  std::vector<double> minus(x0.begin(), x0.end());
  plus[j] += h;
  minus[j] -= h;
  ComplexMatrix central = family.evaluate(plus) - family.evaluate(minus);
  central *= 1.0 / (2.0 * h);
  return (central - family.partial(x0, j)).frobenius_norm();
}

}  // namespace spectral
