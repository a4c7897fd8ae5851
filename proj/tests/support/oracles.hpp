#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the production elimination or graded-bracket code.

#include <cstddef>
#include <random>
#include <vector>

#include "exact/matrix.hpp"
#include "exact/rational.hpp"
#include "graded/cochain.hpp"

namespace oracle {

using netlts::Matrix;
using netlts::Rational;
using netlts::Vector;

/// Sum of signs of all (p,q)-shuffles, found by enumerating S_{p+q} and
/// keeping permutations increasing on both blocks.
struct ShuffleCensus {
  std::size_t count = 0;
  long sign_sum = 0;
};
ShuffleCensus brute_force_shuffles(std::size_t p, std::size_t q);

/// Rank by fraction-free Bareiss elimination on the integer matrix obtained
/// by clearing denominators row by row.
std::size_t bareiss_rank(const Matrix& m);

/// L3 bracket evaluated from its closed form kappa(x,y) z_1 e3 with
/// kappa(x,y) = x1 y2 - x2 y1.
Vector l3_bracket(const Vector& x, const Vector& y, const Vector& z);

/// The closed-form net condition stated for the three-dimensional
/// example: c1 = c2 = 0 and a1^2 b2 - a1 a2 b1 = c3 (a1 b2 - a2 b1 + 1).
bool l3_reference_condition(const Matrix& T);

/// Full solution set of the defining equation on the same fixture, derived
/// by expanding every basis triple by hand: the closed-form condition together
/// with (a1 b2 - a2 b1) b1 = 0.
bool l3_complete_condition(const Matrix& T);

/// -T[u,v,w] + [Tu,Tv,Tw] - T D(Tu,Tv)w on L3 with the adjoint action.
Vector l3_mc_residual(const Matrix& T, const Vector& u, const Vector& v, const Vector& w);

/// The deterministic sample grid over the L3 map parameters.
std::vector<Matrix> l3_parameter_grid();

/// Dense cochain with small random rational entries (roughly a third zero).
netlts::Cochain random_cochain(std::size_t in_dim, std::size_t out_dim, std::size_t arity, std::mt19937& rng,
                               netlts::Cochain::Space space = netlts::Cochain::Space::Plain);
Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng);

}  // namespace oracle
