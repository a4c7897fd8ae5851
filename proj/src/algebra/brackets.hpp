#pragma once

#include <cstddef>
#include <vector>

#include "exact/matrix.hpp"
#include "exact/rational.hpp"

namespace netlts {

/// Structure constants of a trilinear product: at(i,j,k) is the coordinate
/// vector of [e_i, e_j, e_k].
class TriBracket {
 public:
  TriBracket() = default;
  explicit TriBracket(std::size_t dim) : dim_(dim), out_(dim * dim * dim, Vector(dim)) {}

  std::size_t dim() const { return dim_; }
  const Vector& at(std::size_t i, std::size_t j, std::size_t k) const { return out_[slot(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, Vector value);
  void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, Rational c);

  /// Trilinear extension to arbitrary coordinate vectors.
  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;
  /// Matrix of z -> [x, y, z].
  Matrix left_multiplication(const Vector& x, const Vector& y) const;

  bool is_zero() const;
  /// [x,y,z] = -[y,x,z] on all basis triples.
  bool is_skew_in_first_two() const;

  friend bool operator==(const TriBracket&, const TriBracket&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_ = 0;
  std::vector<Vector> out_;
};

/// Structure constants of a bilinear product: at(i,j) is [e_i, e_j].
class BiBracket {
 public:
  BiBracket() = default;
  explicit BiBracket(std::size_t dim) : dim_(dim), out_(dim * dim, Vector(dim)) {}

  std::size_t dim() const { return dim_; }
  const Vector& at(std::size_t i, std::size_t j) const { return out_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, Vector value);
  void set(std::size_t i, std::size_t j, std::size_t k, Rational c);
  /// Sets [e_i,e_j] = value and [e_j,e_i] = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, const Vector& value);

  Vector apply(const Vector& x, const Vector& y) const;

  friend bool operator==(const BiBracket&, const BiBracket&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  std::vector<Vector> out_;
};

}  // namespace netlts
