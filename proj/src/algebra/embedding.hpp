#pragma once

#include <memory>
#include <vector>

#include "algebra/actions.hpp"

namespace netlts {

/// Two Lie triple systems and a coherent action of the first on the second.
class NetContext {
 public:
  /// Throws AxiomError when the action is not coherent.
  static std::shared_ptr<const NetContext> make(LieTripleSystem L, LieTripleSystem Lp, ActionTensor act);

  const LieTripleSystem& L() const { return L_; }
  const LieTripleSystem& Lp() const { return Lp_; }
  const ActionTensor& action() const { return act_; }
  std::size_t dim() const { return L_.dim(); }
  std::size_t dim_p() const { return Lp_.dim(); }

  /// D_theta(x, y) w for x, y in L and w in L'.
  Vector d_apply(const Vector& x, const Vector& y, const Vector& w) const;
  Matrix d_theta(const Vector& x, const Vector& y) const { return act_.d_theta(x, y); }
  /// Structure constants of the hemisemidirect product on L + L'.
  const TriBracket& product() const { return product_; }

  /// True for L3 acting on itself by the adjoint action.
  bool is_l3_adjoint() const;

  /// Throws InputError unless T maps L' to L.
  void check_map_shape(const Matrix& T) const;

 private:
  NetContext(LieTripleSystem L, LieTripleSystem Lp, ActionTensor act);

  LieTripleSystem L_;
  LieTripleSystem Lp_;
  ActionTensor act_;
  std::vector<Matrix> d_;  // D_theta(e_i, e_j), row-major in (i, j)
  TriBracket product_;
};

using ContextPtr = std::shared_ptr<const NetContext>;

/// Checks [Tu,Tv,Tw] = T(D_theta(Tu,Tv)w + [u,v,w]') on all basis triples.
Report net_check(const NetContext& ctx, const Matrix& T, const CheckOptions& options = {});

/// A map that passed net_check.
class Net {
 public:
  /// Throws AxiomError when T fails the defining equation.
  static Net make(ContextPtr ctx, Matrix T);

  const NetContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const Matrix& map() const { return T_; }

 private:
  Net(ContextPtr ctx, Matrix T) : ctx_(std::move(ctx)), T_(std::move(T)) {}
  ContextPtr ctx_;
  Matrix T_;
};

/// The closed-form condition for L3 with its adjoint action:
/// c1 = c2 = 0 and a1^2 b2 - a1 a2 b1 = c3 (a1 b2 - a2 b1 + 1), where the
/// columns of T are (a), (b), (c).
bool l3_closed_form_condition(const Matrix& T);

struct GridRow {
  bool net_pass = false;
  bool condition_pass = false;
  bool agree() const { return net_pass == condition_pass; }
};

/// Evaluates net_check and the closed form on each sample. Throws
/// InputError unless the context is L3 with the adjoint action.
std::vector<GridRow> parametric_grid_check(const NetContext& ctx, const std::vector<Matrix>& samples);

/// [u,v,w]_T = D_theta(Tu,Tv)w + [u,v,w]' without any validation.
TriBracket descendent_bracket(const NetContext& ctx, const Matrix& T);

/// The descendent 3-Leibniz algebra. Throws InternalError if it fails the
/// fundamental identity or T fails to be a homomorphism into L.
ThreeLeibnizAlgebra descendent(const Net& net);

/// Closure of {(Tu, u)} under the hemisemidirect product.
Report graph_subalgebra_check(const NetContext& ctx, const Matrix& T, const CheckOptions& options = {});

/// f and fp as homomorphisms, f Tsrc = Tdst fp, compatibility with theta and
/// D_theta, and, when everything holds and both maps are nets, fp as a
/// homomorphism of descendent algebras.
Report net_hom_check(const NetContext& ctx, const Matrix& Tsrc, const Matrix& Tdst, const Matrix& f, const Matrix& fp,
                     const CheckOptions& options = {});

struct ConjugationOptions {
  /// Also require f T = T fp.
  bool require_intertwining = false;
};

/// Returns f^-1 T fp after checking T, invertibility and the homomorphism
/// hypotheses. Failed hypotheses throw AxiomError (or InputError for a
/// singular matrix).
Matrix conjugate_net(const NetContext& ctx, const Matrix& T, const Matrix& f, const Matrix& fp,
                     const ConjugationOptions& options = {});

}  // namespace netlts
