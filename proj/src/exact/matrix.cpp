#include "exact/matrix.hpp"

#include <string>
#include <utility>

#include "exact/errors.hpp"

namespace netlts {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw InputError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw InputError("matrix-vector size mismatch: " + std::to_string(cols_) + " vs " + std::to_string(v.size()));
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) add_product(out[r], (*this)(r, c), v[c]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw InputError("matrix product shape mismatch: " + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) add_product(out(i, j), aik, b(k, j));
    }
  return out;
}

Matrix operator*(const Rational& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(pivot_row, k));
    const Rational inv = Rational(1) / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const Rational factor = -m(r, c);
      for (std::size_t k = c; k < cols; ++k) add_product(m(r, k), factor, m(pivot_row, k));
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  // Eliminating along the shorter side keeps the row loop small.
  if (m.cols() > m.rows()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

std::vector<Vector> nullspace(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  Matrix m(vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != n) throw InputError("span_basis: vector length mismatch");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = vectors[r][c];
  }
  const RowEchelon e = rref(std::move(m));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (is_zero(v)) return true;
  std::vector<Vector> extended = basis;
  extended.push_back(v);
  return span_basis(extended, v.size()).size() == span_basis(basis, v.size()).size();
}

}  // namespace netlts
