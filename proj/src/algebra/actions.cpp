#include "algebra/actions.hpp"

#include <string>

namespace netlts {

namespace {

Vector flatten(const Matrix& m) { return m.data(); }

bool has_failure_in(const Report& r, std::size_t from) {
  for (std::size_t i = from; i < r.verdicts.size(); ++i)
    if (!r.verdicts[i].pass) return true;
  return false;
}

}  // namespace

ActionTensor::ActionTensor(std::size_t acting_dim, std::size_t acted_dim)
    : n_(acting_dim), m_(acted_dim), theta_(acting_dim * acting_dim, Matrix(acted_dim, acted_dim)) {}

std::size_t ActionTensor::slot(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw InputError("action index out of range for acting dimension " + std::to_string(n_));
  return i * n_ + j;
}

ActionTensor ActionTensor::adjoint(const TriBracket& b) {
  const std::size_t n = b.dim();
  ActionTensor act(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(n, n);
      for (std::size_t k = 0; k < n; ++k) m.set_column(k, b.at(k, i, j));
      act.set(i, j, std::move(m));
    }
  return act;
}

const Matrix& ActionTensor::theta(std::size_t i, std::size_t j) const { return theta_[slot(i, j)]; }

void ActionTensor::set(std::size_t i, std::size_t j, Matrix value) {
  if (value.rows() != m_ || value.cols() != m_) throw InputError("action matrix has wrong shape");
  theta_[slot(i, j)] = std::move(value);
}

Matrix ActionTensor::theta(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw InputError("action argument has wrong dimension");
  Matrix out(m_, m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      out += (x[i] * y[j]) * theta_[i * n_ + j];
    }
  }
  return out;
}

Matrix ActionTensor::d_theta(std::size_t i, std::size_t j) const { return theta(j, i) - theta(i, j); }

Matrix ActionTensor::d_theta(const Vector& x, const Vector& y) const { return theta(y, x) - theta(x, y); }

bool ActionTensor::is_zero() const {
  for (const auto& m : theta_)
    if (!m.is_zero()) return false;
  return true;
}

Report verify_representation(const LieTripleSystem& L, const ActionTensor& act, const CheckOptions& options) {
  if (act.acting_dim() != L.dim()) throw InputError("action acting dimension does not match the algebra");
  const std::size_t n = L.dim();
  const TriBracket& br = L.bracket();

  IdentityTally first("representation.theta-product", options);
  IdentityTally second("representation.theta-d-commutator", options);
  IdentityTally derived("representation.d-commutator", options);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Vector ex = unit_vector(n, x), eb = unit_vector(n, b), ea = unit_vector(n, a);
          Matrix lhs = act.theta(a, b) * act.theta(x, y) + act.d_theta(y, a) * act.theta(x, b);
          Matrix rhs = act.theta(y, b) * act.theta(x, a) + act.theta(ex, br.at(y, a, b));
          first.compare({x, y, a, b}, flatten(lhs), flatten(rhs));

          const Matrix dxy = act.d_theta(x, y);
          lhs = act.theta(a, b) * dxy + act.theta(br.at(x, y, a), eb) + act.theta(ea, br.at(x, y, b));
          rhs = dxy * act.theta(a, b);
          second.compare({x, y, a, b}, flatten(lhs), flatten(rhs));

          const Matrix dab = act.d_theta(a, b);
          lhs = dab * dxy + act.d_theta(br.at(x, y, a), eb) + act.d_theta(ea, br.at(x, y, b));
          rhs = dxy * dab;
          derived.compare({x, y, a, b}, flatten(lhs), flatten(rhs));
        }

  Report report;
  report.append(std::move(first).finish());
  report.append(std::move(second).finish());
  report.append(std::move(derived).finish());
  if (report.verdicts[0].pass && report.verdicts[1].pass && !report.verdicts[2].pass)
    throw InternalError("representation identities hold but the D_theta identity fails");
  return report;
}

Report verify_coherent_action(const LieTripleSystem& L, const LieTripleSystem& Lp, const ActionTensor& act,
                              const CheckOptions& options) {
  if (act.acted_dim() != Lp.dim()) throw InputError("action acted dimension does not match the second algebra");
  Report report = verify_representation(L, act, options);

  const std::size_t n = L.dim();
  const std::size_t m = Lp.dim();
  const TriBracket& bp = Lp.bracket();
  const std::vector<Vector> centre = center(Lp);

  // the same three properties for an operator family indexed by basis pairs
  auto check_family = [&](const std::string& stem, auto&& op) {
    IdentityTally central(stem + ".central", options);
    IdentityTally kills(stem + ".kills-products", options);
    IdentityTally derivation(stem + ".derivation", options);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Matrix A = op(x, y);
        std::vector<Vector> image(m);
        for (std::size_t u = 0; u < m; ++u) image[u] = A.column(u);
        for (std::size_t u = 0; u < m; ++u) {
          if (in_span(centre, image[u])) continue;
          // locate a bracket slot pair exhibiting non-centrality
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
              central.expect_zero({x, y, u, j, k}, bp.apply(image[u], unit_vector(m, j), unit_vector(m, k)));
        }
        for (std::size_t u = 0; u < m; ++u)
          for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
              const Vector prod = A.apply(bp.at(u, v, w));
              kills.expect_zero({x, y, u, v, w}, prod);
              const Vector eu = unit_vector(m, u), ev = unit_vector(m, v), ew = unit_vector(m, w);
              Vector rhs = bp.apply(image[u], ev, ew);
              rhs = rhs + bp.apply(eu, image[v], ew);
              rhs = rhs + bp.apply(eu, ev, image[w]);
              derivation.compare({x, y, u, v, w}, prod, rhs);
            }
      }
    report.append(std::move(central).finish());
    report.append(std::move(kills).finish());
    report.append(std::move(derivation).finish());
  };

  check_family("action", [&](std::size_t x, std::size_t y) { return act.theta(x, y); });
  const bool premises = report.pass();
  const std::size_t consequences = report.verdicts.size();
  check_family("action.d", [&](std::size_t x, std::size_t y) { return act.d_theta(x, y); });
  if (premises && has_failure_in(report, consequences))
    throw InternalError("coherent action axioms hold but a D_theta consequence fails");
  return report;
}

TriBracket hemisemidirect_bracket(const TriBracket& L, const TriBracket& Lp, const ActionTensor& act) {
  const std::size_t n = L.dim();
  const std::size_t m = Lp.dim();
  if (act.acting_dim() != n || act.acted_dim() != m) throw InputError("action shape does not match the algebras");
  TriBracket out(n + m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Vector v(n + m);
        for (std::size_t l = 0; l < n; ++l) v[l] = L.at(a, b, c)[l];
        out.set(a, b, c, std::move(v));
      }
      const Matrix d = act.d_theta(a, b);
      for (std::size_t w = 0; w < m; ++w) {
        Vector v(n + m);
        for (std::size_t l = 0; l < m; ++l) v[n + l] = d(l, w);
        out.set(a, b, n + w, std::move(v));
      }
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        Vector val(n + m);
        for (std::size_t l = 0; l < m; ++l) val[n + l] = Lp.at(u, v, w)[l];
        out.set(n + u, n + v, n + w, std::move(val));
      }
  return out;
}

ThreeLeibnizAlgebra hemisemidirect(const LieTripleSystem& L, const LieTripleSystem& Lp, const ActionTensor& act) {
  const Report coherent = verify_coherent_action(L, Lp, act);
  if (!coherent.pass())
    throw AxiomError("action is not coherent (" + coherent.first_failure()->identity + ")", coherent);
  std::vector<std::string> labels = L.labels();
  for (const auto& l : Lp.labels()) labels.push_back(l + "'");
  TriBracket b = hemisemidirect_bracket(L.bracket(), Lp.bracket(), act);
  if (!verify_3leibniz(b).pass()) throw InternalError("hemisemidirect product fails the fundamental identity");
  return ThreeLeibnizAlgebra::make(std::move(b), std::move(labels));
}

}  // namespace netlts
