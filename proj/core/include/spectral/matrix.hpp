#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spectral {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Explicitly sized constructors require positive dimensions and finite
/// entries. A default-constructed matrix is the empty 0x0 placeholder and
/// is only meaningful as a value to be assigned over.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;

  /// Copy of the nr x nc block whose top-left corner is (r0, c0).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src);
  ComplexMatrix columns(std::size_t c0, std::size_t count) const {
    return block(0, c0, rows_, count);
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// lhs* · rhs without materialising the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// ‖A − A*‖_F. Throws a dimension error for non-square input.
double hermiticity_defect(const ComplexMatrix& a);

/// (A + A*) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// Real part of the trace of a Hermitian matrix. The imaginary part must
/// vanish to roundoff (1e-10 · n · max(1, ‖A‖_F)); otherwise a
/// precondition error is raised.
double trace_hermitian(const ComplexMatrix& a);

}  // namespace spectral
