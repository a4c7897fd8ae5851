#pragma once

#include "algebra/embedding.hpp"
#include "algebra/verdict.hpp"

namespace netlts {

/// An element a ^ b of the exterior square of L, kept as the two factors.
struct WedgePair {
  Vector a;
  Vector b;
};

/// The order-t, order-t^2 and order-t^3 coefficients of the defining
/// equation for T + t T1, as verdicts "5.1", "5.2", "5.3". T itself is not
/// required to be a net.
Report deformation_equations(const NetContext& ctx, const Matrix& T, const Matrix& T1,
                             const CheckOptions& options = {});

/// The coefficient equations for a net, cross-checked against the defining
/// equation of T + c T1 for c in {1, 2, 3, 5} and against the degree-one
/// coboundary of T1. Disagreement is an InternalError.
Report deform_check(const Net& net, const Matrix& T1, const CheckOptions& options = {});

/// omega1(u,v,w) = D(T1 u, T v)w + D(T u, T1 v)w. Throws AxiomError unless
/// T1 generates a deformation.
TriBracket omega1(const Net& net, const Matrix& T1);

/// The bracket and action conditions a pair must satisfy for
/// (id + t[a,b,-], id + t D(a,b)) to preserve both algebras and theta.
Report pair_hom_conditions(const NetContext& ctx, const WedgePair& pair, const CheckOptions& options = {});

/// Whether T + t T1tilde and T + t T1 are related by the pair. Also reports
/// whether each direction generates a deformation.
Report equivalence_check(const Net& net, const Matrix& T1, const Matrix& T1tilde, const WedgePair& pair,
                         const CheckOptions& options = {});

/// Pair conditions plus [a, b, T D(a,b)u - [a,b,Tu]] = 0.
Report nijenhuis_check(const Net& net, const WedgePair& pair, const CheckOptions& options = {});

/// The direction T1 = T D(a,b) - [a,b,T-] generated by a Nijenhuis pair.
/// Throws AxiomError when the pair is not Nijenhuis.
Matrix trivial_deform(const Net& net, const WedgePair& pair);

}  // namespace netlts
