#pragma once

#include <cstddef>
#include <vector>

#include "algebra/algebras.hpp"
#include "exact/matrix.hpp"

namespace netlts {

/// theta(e_i, e_j) as an m-by-m matrix for every ordered pair of basis
/// indices of the acting n-dimensional system.
class ActionTensor {
 public:
  ActionTensor() = default;
  ActionTensor(std::size_t acting_dim, std::size_t acted_dim);

  static ActionTensor zero(std::size_t acting_dim, std::size_t acted_dim) { return {acting_dim, acted_dim}; }
  /// theta(x,y)z = [z,x,y].
  static ActionTensor adjoint(const TriBracket& b);

  std::size_t acting_dim() const { return n_; }
  std::size_t acted_dim() const { return m_; }

  const Matrix& theta(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Matrix value);
  Matrix theta(const Vector& x, const Vector& y) const;

  /// theta(e_j, e_i) - theta(e_i, e_j).
  Matrix d_theta(std::size_t i, std::size_t j) const;
  Matrix d_theta(const Vector& x, const Vector& y) const;

  bool is_zero() const;
  friend bool operator==(const ActionTensor&, const ActionTensor&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Matrix> theta_;
};

/// The two representation identities, followed by the identity for D_theta
/// that they imply. Throws InputError on a dimension mismatch.
Report verify_representation(const LieTripleSystem& L, const ActionTensor& act, const CheckOptions& options = {});

/// Representation identities, then centrality of theta(x,y)u, vanishing on
/// products, the derivation property, and the same three facts for D_theta.
Report verify_coherent_action(const LieTripleSystem& L, const LieTripleSystem& Lp, const ActionTensor& act,
                              const CheckOptions& options = {});

/// Raw product on L + L' (L basis first); no coherence check.
TriBracket hemisemidirect_bracket(const TriBracket& L, const TriBracket& Lp, const ActionTensor& act);

/// Rejects non-coherent actions with InputError.
ThreeLeibnizAlgebra hemisemidirect(const LieTripleSystem& L, const LieTripleSystem& Lp, const ActionTensor& act);

}  // namespace netlts
