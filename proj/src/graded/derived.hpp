#pragma once

#include "algebra/embedding.hpp"
#include "graded/bracket.hpp"

namespace netlts {

/// Derived brackets on cochains from L' to L, obtained by bracketing with the
/// hemisemidirect structure Delta on E = L + L' and projecting back.
/// Cochains "in F" have input dimension dim L' and output dimension dim L.
class DerivedBrackets {
 public:
  explicit DerivedBrackets(ContextPtr ctx);

  const NetContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  std::size_t dim_e() const { return ctx_->dim() + ctx_->dim_p(); }

  /// Delta as an arity-2 cochain on E.
  const Cochain& delta() const { return delta_; }
  const NodePtr& delta_node() const { return delta_node_; }

  /// Arity-1 cochain in F from a map L' -> L.
  Cochain from_map(const Matrix& T) const;
  /// Precompose every slot with E -> L', postcompose with L -> E.
  Cochain include(const Cochain& f) const;
  /// Restrict every slot to L' arguments and keep the L component.
  Cochain project(const Cochain& g) const;
  /// Same, evaluating only the entries the projection needs.
  Cochain project(const CochainNode& g) const;

  Cochain l1(const Cochain& f) const;
  /// Always zero for this data; exposed for checking.
  Cochain l2(const Cochain& f, const Cochain& g) const;
  Cochain l3(const Cochain& f, const Cochain& g, const Cochain& h) const;
  /// Always zero for this data; exposed for spot checks at low arity.
  Cochain l4(const Cochain& f, const Cochain& g, const Cochain& h, const Cochain& k) const;

  /// l1(T) + l3(T,T,T)/6; vanishes exactly when T satisfies the defining equation.
  Cochain mc_residual(const Matrix& T) const;

  void check_f(const Cochain& f) const;

 private:
  ContextPtr ctx_;
  Cochain delta_;
  NodePtr delta_node_;
};

/// The structure twisted by a net T: l1T = l1 + l3(T,T,-)/2, l2T = l3(T,-,-),
/// l3T = l3. Keeps memoized intermediate brackets; not thread safe.
class TwistedBrackets {
 public:
  /// Throws AxiomError when T is not a net.
  TwistedBrackets(const DerivedBrackets& base, const Matrix& T);

  const Matrix& map() const { return T_; }

  Cochain l1T(const Cochain& f) const;
  Cochain l2T(const Cochain& f, const Cochain& g) const;
  Cochain l3T(const Cochain& f, const Cochain& g, const Cochain& h) const;

  /// l1T(Tt) + l2T(Tt,Tt)/2 + l3T(Tt,Tt,Tt)/6.
  Cochain mc_residual(const Matrix& Tt) const;

  /// The differential l1T.
  Cochain dT(const Cochain& f) const { return l1T(f); }

 private:
  DerivedBrackets base_;
  Matrix T_;
  NodePtr t_hat_;
  NodePtr delta_t_;    // [Delta, T]
  NodePtr delta_tt_;   // [[Delta, T], T]
};

}  // namespace netlts
