#pragma once

#include <cstddef>
#include <vector>

#include "algebra/brackets.hpp"
#include "exact/combinatorics.hpp"
#include "exact/matrix.hpp"

namespace netlts {

/// Largest supported arity (pair slots + final slot).
inline constexpr std::size_t kMaxArity = 5;

/// Basis argument tuple: canonical wedge-pair indices, then the final slot.
struct ArgTuple {
  std::vector<std::size_t> pairs;
  std::size_t last = 0;
  friend bool operator==(const ArgTuple&, const ArgTuple&) = default;
};

/// Multilinear map (wedge^2 V)^{arity-1} (x) V -> W stored densely on
/// canonical basis tuples. Tuples are ordered lexicographically by
/// (pair indices..., final index).
class Cochain {
 public:
  enum class Space { Plain, E, F };

  Cochain() = default;
  Cochain(std::size_t in_dim, std::size_t out_dim, std::size_t arity, Space space = Space::Plain);

  static Cochain from_matrix(const Matrix& m, Space space = Space::Plain);
  /// Arity-2 cochain (x ^ y, z) -> [x,y,z]; the bracket must be skew in its
  /// first two slots.
  static Cochain from_bracket(const TriBracket& b, Space space = Space::Plain);

  std::size_t in_dim() const { return in_; }
  std::size_t out_dim() const { return out_; }
  std::size_t arity() const { return arity_; }
  std::size_t degree() const { return arity_ - 1; }
  Space space() const { return space_; }
  void set_space(Space s) { space_ = s; }
  const WedgeBasis& wedges() const { return wedges_; }

  std::size_t tuple_count() const { return values_.size(); }
  std::size_t flat(const ArgTuple& t) const;
  ArgTuple tuple(std::size_t flat) const;

  const Vector& at(std::size_t flat) const { return values_[flat]; }
  const Vector& at(const ArgTuple& t) const { return values_[flat(t)]; }
  void set(std::size_t flat, Vector v);
  void set(const ArgTuple& t, Vector v) { set(flat(t), std::move(v)); }

  /// Value at x_1 ^ y_1, ..., x_k ^ y_k, z for arbitrary vectors.
  Vector eval(const std::vector<std::pair<Vector, Vector>>& pairs, const Vector& last) const;
  /// Same with each pair slot already expanded in the wedge basis.
  Vector eval_wedges(const std::vector<WedgeVector>& pairs, const Vector& last) const;

  /// Arity-1 cochains only.
  Matrix to_matrix() const;
  /// Arity-2 cochains only: the trilinear map (x, y, z) -> value(x ^ y, z).
  TriBracket to_bracket() const;

  bool is_zero() const;
  bool same_shape(const Cochain& o) const { return in_ == o.in_ && out_ == o.out_ && arity_ == o.arity_; }

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& c, Cochain a);
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.same_shape(b) && a.values_ == b.values_;
  }

 private:
  std::size_t in_ = 0;
  std::size_t out_ = 0;
  std::size_t arity_ = 1;
  Space space_ = Space::Plain;
  WedgeBasis wedges_{0};
  std::vector<Vector> values_;
};

const char* to_string(Cochain::Space s);

}  // namespace netlts
