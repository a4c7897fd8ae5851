#pragma once

#include "algebra/actions.hpp"
#include "algebra/algebras.hpp"
#include "algebra/verdict.hpp"

namespace netlts {

/// rho(e_i) as an m-by-m matrix for each basis element of the acting Lie algebra.
class LieActionTensor {
 public:
  LieActionTensor() = default;
  LieActionTensor(std::size_t acting_dim, std::size_t acted_dim);

  std::size_t acting_dim() const { return rho_.size(); }
  std::size_t acted_dim() const { return m_; }

  const Matrix& rho(std::size_t i) const { return rho_.at(i); }
  Matrix rho(const Vector& x) const;
  void set(std::size_t i, Matrix value);

  friend bool operator==(const LieActionTensor&, const LieActionTensor&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<Matrix> rho_;
};

/// Homomorphism into gl(L'), derivation property of each rho(e_i), and
/// [rho(x)u, v]' = 0.
Report lie_action_check(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho,
                        const CheckOptions& options = {});

/// [Tu,Tv] = T(rho(Tu)v + [u,v]'). Throws AxiomError when rho is not a
/// coherent action.
Report lie_net_check(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho, const Matrix& T,
                     const CheckOptions& options = {});

/// [x,y,z] = [[x,y],z].
LieTripleSystem lts_from_lie(const LieAlgebra& L);

/// theta(x,y) = rho(y) rho(x). Throws AxiomError when rho is not a coherent
/// action and InternalError if the result is not a coherent LTS action.
ActionTensor theta_from_rho(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho);

/// The defining equation of T between the induced triple systems. Throws
/// AxiomError unless T passes lie_net_check, and InternalError if the
/// transported check fails.
Report transport_check(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho, const Matrix& T,
                       const CheckOptions& options = {});

}  // namespace netlts
