#include "algebra/brackets.hpp"

#include <string>

#include "exact/errors.hpp"

namespace netlts {

std::size_t TriBracket::slot(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw InputError("bracket index out of range for dimension " + std::to_string(dim_));
  return (i * dim_ + j) * dim_ + k;
}

void TriBracket::set(std::size_t i, std::size_t j, std::size_t k, Vector value) {
  if (value.size() != dim_) throw InputError("bracket value has wrong dimension");
  out_[slot(i, j, k)] = std::move(value);
}

void TriBracket::set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, Rational c) {
  if (l >= dim_) throw InputError("bracket output index out of range");
  out_[slot(i, j, k)][l] = std::move(c);
}

Vector TriBracket::apply(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw InputError("bracket argument has wrong dimension");
  Vector out(dim_);
  Rational xy;
  Rational xyz;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        xyz = xy * z[k];
        const Vector& v = out_[(i * dim_ + j) * dim_ + k];
        for (std::size_t l = 0; l < dim_; ++l) add_product(out[l], xyz, v[l]);
      }
    }
  }
  return out;
}

Matrix TriBracket::left_multiplication(const Vector& x, const Vector& y) const {
  Matrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) m.set_column(k, apply(x, y, unit_vector(dim_, k)));
  return m;
}

bool TriBracket::is_zero() const {
  for (const auto& v : out_)
    if (!netlts::is_zero(v)) return false;
  return true;
}

bool TriBracket::is_skew_in_first_two() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!netlts::is_zero(at(i, j, k) + at(j, i, k))) return false;
  return true;
}

std::size_t BiBracket::slot(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw InputError("bracket index out of range for dimension " + std::to_string(dim_));
  return i * dim_ + j;
}

void BiBracket::set(std::size_t i, std::size_t j, Vector value) {
  if (value.size() != dim_) throw InputError("bracket value has wrong dimension");
  out_[slot(i, j)] = std::move(value);
}

void BiBracket::set(std::size_t i, std::size_t j, std::size_t k, Rational c) {
  if (k >= dim_) throw InputError("bracket output index out of range");
  out_[slot(i, j)][k] = std::move(c);
}

void BiBracket::set_antisymmetric(std::size_t i, std::size_t j, const Vector& value) {
  set(i, j, value);
  set(j, i, Rational(-1) * value);
}

Vector BiBracket::apply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("bracket argument has wrong dimension");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      add_scaled(out, x[i] * y[j], out_[i * dim_ + j]);
    }
  }
  return out;
}

}  // namespace netlts
