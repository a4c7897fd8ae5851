#pragma once

#include <vector>

#include "algebra/algebras.hpp"
#include "algebra/embedding.hpp"
#include "algebra/verdict.hpp"

namespace netlts {

/// Representation (V; rho_l, rho_m, rho_r) of a 3-Leibniz algebra g.
/// Each action is stored as a family of dim V square matrices indexed by the
/// two algebra slots:
///   rho_l(e_i, e_j, u) = left(i, j) u
///   rho_m(e_i, u, e_k) = middle(i, k) u
///   rho_r(u, e_j, e_k) = right(j, k) u
class LeibnizRep {
 public:
  LeibnizRep(ThreeLeibnizAlgebra algebra, std::size_t space_dim);

  const ThreeLeibnizAlgebra& algebra() const { return algebra_; }
  std::size_t algebra_dim() const { return algebra_.dim(); }
  std::size_t space_dim() const { return v_; }

  const Matrix& left(std::size_t i, std::size_t j) const { return left_.at(i * algebra_dim() + j); }
  const Matrix& middle(std::size_t i, std::size_t k) const { return middle_.at(i * algebra_dim() + k); }
  const Matrix& right(std::size_t j, std::size_t k) const { return right_.at(j * algebra_dim() + k); }
  void set_left(std::size_t i, std::size_t j, Matrix m);
  void set_middle(std::size_t i, std::size_t k, Matrix m);
  void set_right(std::size_t j, std::size_t k, Matrix m);

  Vector rho_l(const Vector& x, const Vector& y, const Vector& u) const;
  Vector rho_m(const Vector& x, const Vector& u, const Vector& z) const;
  Vector rho_r(const Vector& u, const Vector& y, const Vector& z) const;

 private:
  void check(const Matrix& m) const;
  Vector apply_family(const std::vector<Matrix>& fam, const Vector& a, const Vector& b, const Vector& u) const;

  ThreeLeibnizAlgebra algebra_;
  std::size_t v_;
  std::vector<Matrix> left_, middle_, right_;
};

LeibnizRep zero_rep(const ThreeLeibnizAlgebra& g, std::size_t space_dim);
/// V = g with all three actions given by the bracket.
LeibnizRep regular_rep(const ThreeLeibnizAlgebra& g);

/// The five compatibility identities on all basis tuples.
Report verify_leibniz_rep(const LeibnizRep& rep, const CheckOptions& options = {});

/// L as a representation of the descendent algebra on L':
///   rho_l(u,v,x) = [Tu,Tv,x]
///   rho_m(u,x,v) = [Tu,x,Tv] - T D(Tu,x)v
///   rho_r(x,u,v) = [x,Tu,Tv] - T D(x,Tu)v
/// Throws InternalError if the result is not a representation.
LeibnizRep induced_rep(const Net& net);

}  // namespace netlts
