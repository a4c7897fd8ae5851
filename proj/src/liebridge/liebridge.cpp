#include "liebridge/liebridge.hpp"

#include "algebra/embedding.hpp"
#include "exact/errors.hpp"

namespace netlts {

LieActionTensor::LieActionTensor(std::size_t acting_dim, std::size_t acted_dim)
    : m_(acted_dim), rho_(acting_dim, Matrix(acted_dim, acted_dim)) {}

Matrix LieActionTensor::rho(const Vector& x) const {
  if (x.size() != rho_.size()) throw InputError("vector does not lie in the acting algebra");
  Matrix out(m_, m_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * rho_[i];
  return out;
}

void LieActionTensor::set(std::size_t i, Matrix value) {
  if (i >= rho_.size()) throw InputError("action index out of range");
  if (value.rows() != m_ || value.cols() != m_) throw InputError("action matrix has the wrong shape");
  rho_[i] = std::move(value);
}

namespace {

void check_shapes(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho) {
  if (rho.acting_dim() != L.dim() || rho.acted_dim() != Lp.dim())
    throw InputError("action dimensions do not match the algebras");
}

void require_action(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho) {
  const Report r = lie_action_check(L, Lp, rho);
  if (!r.pass()) throw AxiomError("not a coherent Lie action", r);
}

}  // namespace

Report lie_action_check(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho,
                        const CheckOptions& options) {
  check_shapes(L, Lp, rho);
  const std::size_t n = L.dim(), m = Lp.dim();
  IdentityTally hom("lie-action.homomorphism", options), der("lie-action.derivation", options),
      coh("lie-action.coherent", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = rho.rho(L.bracket().at(i, j));
      const Matrix rhs = rho.rho(i) * rho.rho(j) - rho.rho(j) * rho.rho(i);
      for (std::size_t u = 0; u < m; ++u) hom.compare({i, j, u}, lhs.column(u), rhs.column(u));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        const Vector U = unit_vector(m, u), V = unit_vector(m, v);
        const Matrix& r = rho.rho(i);
        der.compare({i, u, v}, r.apply(Lp.bracket().at(u, v)),
                    Lp.bracket().apply(r.apply(U), V) + Lp.bracket().apply(U, r.apply(V)));
        coh.expect_zero({i, u, v}, Lp.bracket().apply(r.apply(U), V));
      }
  Report out;
  out.append(std::move(hom).finish());
  out.append(std::move(der).finish());
  out.append(std::move(coh).finish());
  return out;
}

Report lie_net_check(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho, const Matrix& T,
                     const CheckOptions& options) {
  check_shapes(L, Lp, rho);
  if (T.rows() != L.dim() || T.cols() != Lp.dim()) throw InputError("map must send L' to L");
  require_action(L, Lp, rho);
  const std::size_t m = Lp.dim();
  IdentityTally eq("lie-net.equation", options);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const Vector Tu = T.column(u), Tv = T.column(v);
      eq.compare({u, v}, L.bracket().apply(Tu, Tv),
                 T.apply(rho.rho(Tu).apply(unit_vector(m, v)) + Lp.bracket().at(u, v)));
    }
  Report out;
  out.append(std::move(eq).finish());
  return out;
}

LieTripleSystem lts_from_lie(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const BiBracket& b = L.bracket();
  TriBracket t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, b.apply(b.at(i, j), unit_vector(n, k)));
  if (!verify_lts(t).pass()) throw InternalError("bracket of a Lie algebra composed with itself is not a Lie triple system");
  return LieTripleSystem::make(std::move(t), L.labels());
}

ActionTensor theta_from_rho(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho) {
  require_action(L, Lp, rho);
  const std::size_t n = L.dim();
  ActionTensor act(n, Lp.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) act.set(i, j, rho.rho(j) * rho.rho(i));
  if (!verify_coherent_action(lts_from_lie(L), lts_from_lie(Lp), act).pass())
    throw InternalError("induced action is not a coherent action of the triple systems");
  return act;
}

Report transport_check(const LieAlgebra& L, const LieAlgebra& Lp, const LieActionTensor& rho, const Matrix& T,
                       const CheckOptions& options) {
  const Report lie = lie_net_check(L, Lp, rho, T, options);
  if (!lie.pass()) throw AxiomError("map fails the Lie-level defining equation", lie);
  const auto ctx = NetContext::make(lts_from_lie(L), lts_from_lie(Lp), theta_from_rho(L, Lp, rho));
  Report r = net_check(*ctx, T, options);
  if (!r.pass()) throw InternalError("transported map fails the triple-system defining equation");
  return r;
}

}  // namespace netlts
