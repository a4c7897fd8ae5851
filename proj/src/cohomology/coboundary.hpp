#pragma once

#include <optional>

#include "cohomology/leibniz_rep.hpp"
#include "graded/cochain.hpp"

namespace netlts {

/// Largest n for which coboundary matrices are assembled.
inline constexpr std::size_t kMaxCoboundaryDegree = 3;

/// The coboundary delta^n on n-cochains (n-1 pair slots and a final slot)
/// of a 3-Leibniz algebra with values in a representation.
Cochain delta_n(const LeibnizRep& rep, const Cochain& f);

/// The 1-cochain u -> T D(a,b)u - [a,b,Tu].
Matrix partial0(const Net& net, const Vector& a, const Vector& b);

/// Coordinates of a cochain: entry (tuple t, component r) at t * out + r.
Vector cochain_coordinates(const Cochain& f);
Cochain cochain_from_coordinates(const Vector& coords, std::size_t in_dim, std::size_t out_dim, std::size_t arity);

/// Dimension of C^n: dim wedge^2 L' to the n-1, times dim L' dim L.
/// C^0 is wedge^2 L.
std::size_t cochain_space_dim(const NetContext& ctx, std::size_t n);

/// Matrix of d^n in the coordinate bases above; column c is the image of the
/// c-th basis cochain. For n = 0 the columns are indexed by wedge pairs of L.
Matrix coboundary_matrix(const Net& net, std::size_t n);
/// Same, reusing an already built induced representation.
Matrix coboundary_matrix(const Net& net, const LeibnizRep& rep, std::size_t n);

struct CohomologyReport {
  std::size_t n = 0;
  std::size_t dim_c = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
  /// Kernel dimension of d^0 on wedge^2 L.
  std::size_t degree0_kernel = 0;
  std::optional<std::vector<Vector>> cocycle_basis;
};

struct CohomologyOptions {
  bool allow_degree3 = false;
  bool cocycle_basis = false;
};

/// Supported degrees are 1 and 2, and 3 when allowed.
CohomologyReport cohomology_dims(const Net& net, std::size_t n, const CohomologyOptions& options = {});

/// Compares d^n f with (-1)^{n-1} times the twisted differential dT f.
/// f maps L' arguments to L values with arity n in {1, 2}.
Verdict compare_with_dT(const Net& net, const Cochain& f, const CheckOptions& options = {});

}  // namespace netlts
