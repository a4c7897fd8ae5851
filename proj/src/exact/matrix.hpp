#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "exact/rational.hpp"

namespace netlts {

/// Dense row-major matrix over the rationals. Column j holds the image of
/// the j-th basis vector when the matrix represents a linear map.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  /// Matrix-vector product; throws InputError on size mismatch.
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Exact Gauss-Jordan elimination to reduced row-echelon form.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column of the RREF, in
/// increasing free-column order. Empty when the kernel is trivial.
std::vector<Vector> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Basis (RREF rows) of the span of the given vectors, all of length n.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n);

/// True when v lies in the span of the given basis.
bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace netlts
