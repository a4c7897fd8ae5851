#include "deformation/deformation.hpp"

#include "cohomology/coboundary.hpp"
#include "exact/errors.hpp"

namespace netlts {

Report deformation_equations(const NetContext& ctx, const Matrix& T, const Matrix& T1, const CheckOptions& options) {
  ctx.check_map_shape(T);
  ctx.check_map_shape(T1);
  const std::size_t m = ctx.dim_p();
  const auto& L = ctx.L();
  IdentityTally first("5.1", options), second("5.2", options), third("5.3", options);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector u = unit_vector(m, i), v = unit_vector(m, j), w = unit_vector(m, k);
        const Vector Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
        const Vector Su = T1.apply(u), Sv = T1.apply(v), Sw = T1.apply(w);
        const Vector mixed = ctx.d_apply(Su, Tv, w) + ctx.d_apply(Tu, Sv, w);

        Vector lhs = L(Tu, Tv, Sw) + L(Tu, Sv, Tw) + L(Su, Tv, Tw);
        Vector rhs = T1.apply(ctx.d_apply(Tu, Tv, w) + ctx.Lp()(u, v, w)) + T.apply(mixed);
        first.compare({i, j, k}, lhs, rhs);

        lhs = L(Tu, Sv, Sw) + L(Su, Tv, Sw) + L(Su, Sv, Tw);
        rhs = T.apply(ctx.d_apply(Su, Sv, w)) + T1.apply(mixed);
        second.compare({i, j, k}, lhs, rhs);

        third.compare({i, j, k}, L(Su, Sv, Sw), T1.apply(ctx.d_apply(Su, Sv, w)));
      }
  Report r;
  r.append(std::move(first).finish());
  r.append(std::move(second).finish());
  r.append(std::move(third).finish());
  return r;
}

Report deform_check(const Net& net, const Matrix& T1, const CheckOptions& options) {
  const NetContext& ctx = net.context();
  Report r = deformation_equations(ctx, net.map(), T1, options);
  for (int c : {1, 2, 3, 5}) {
    const bool sampled = net_check(ctx, net.map() + Rational(c) * T1, CheckOptions{0}).pass();
    if (sampled != r.pass()) throw InternalError("coefficient equations disagree with the sampled defining equation");
  }
  const bool cocycle = delta_n(induced_rep(net), Cochain::from_matrix(T1, Cochain::Space::F)).is_zero();
  if (cocycle != r.at("5.1").pass) throw InternalError("order-t equation disagrees with the cocycle condition");
  return r;
}

TriBracket omega1(const Net& net, const Matrix& T1) {
  const Report r = deform_check(net, T1);
  if (!r.pass()) throw AxiomError("direction does not generate a deformation", r);
  const NetContext& ctx = net.context();
  const Matrix& T = net.map();
  const std::size_t m = ctx.dim_p();
  TriBracket w(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector u = unit_vector(m, i), v = unit_vector(m, j), z = unit_vector(m, k);
        w.set(i, j, k, ctx.d_apply(T1.apply(u), T.apply(v), z) + ctx.d_apply(T.apply(u), T1.apply(v), z));
      }
  // the descendent bracket of T + tT1 is quadratic in t; recover its linear
  // coefficient from t = 1 and t = 2
  const TriBracket b0 = descendent_bracket(ctx, T);
  const TriBracket b1 = descendent_bracket(ctx, T + T1);
  const TriBracket b2 = descendent_bracket(ctx, T + Rational(2) * T1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector lin = Rational(1, 2) * (Rational(4) * (b1.at(i, j, k) - b0.at(i, j, k)) - (b2.at(i, j, k) - b0.at(i, j, k)));
        if (lin != w.at(i, j, k)) throw InternalError("omega1 is not the linear term of the deformed descendent bracket");
      }
  return w;
}

namespace {

void check_pair(const NetContext& ctx, const WedgePair& p) {
  if (p.a.size() != ctx.dim() || p.b.size() != ctx.dim()) throw InputError("pair entries must lie in L");
}

Verdict summary_verdict(std::string identity, const Report& r) {
  Verdict v;
  v.identity = std::move(identity);
  v.pass = r.pass();
  for (const auto& x : r.verdicts) v.violations += x.violations;
  if (const Verdict* f = r.first_failure(); f && !f->witnesses.empty()) v.witnesses.push_back(f->witnesses.front());
  return v;
}

}  // namespace

Report pair_hom_conditions(const NetContext& ctx, const WedgePair& pair, const CheckOptions& options) {
  check_pair(ctx, pair);
  const std::size_t n = ctx.dim(), m = ctx.dim_p();
  const auto& L = ctx.L();
  const auto& Lp = ctx.Lp();
  const auto& act = ctx.action();
  const auto P = [&](const Vector& x) { return L(pair.a, pair.b, x); };
  const Matrix Q = ctx.d_theta(pair.a, pair.b);

  IdentityTally b2("pair.bracket.quadratic", options), b3("pair.bracket.cubic", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
        const Vector px = P(x), py = P(y), pz = P(z);
        b2.expect_zero({i, j, k}, L(x, py, pz) + L(px, y, pz) + L(px, py, z));
        b3.expect_zero({i, j, k}, L(px, py, pz));
      }
  IdentityTally p2("pair.bracket-p.quadratic", options), p3("pair.bracket-p.cubic", options);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector u = unit_vector(m, i), v = unit_vector(m, j), w = unit_vector(m, k);
        const Vector qu = Q.apply(u), qv = Q.apply(v), qw = Q.apply(w);
        p2.expect_zero({i, j, k}, Lp(u, qv, qw) + Lp(qu, v, qw) + Lp(qu, qv, w));
        p3.expect_zero({i, j, k}, Lp(qu, qv, qw));
      }
  IdentityTally t2("pair.theta.quadratic", options), t3("pair.theta.cubic", options);
  IdentityTally d2("pair.d-theta.quadratic", options), d3("pair.d-theta.cubic", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(n, i), y = unit_vector(n, j);
      const Vector px = P(x), py = P(y);
      const Matrix th_pp = act.theta(px, py), th_py = act.theta(px, y), th_xp = act.theta(x, py);
      const Matrix dd_pp = act.d_theta(px, py), dd_py = act.d_theta(px, y), dd_xp = act.d_theta(x, py);
      for (std::size_t k = 0; k < m; ++k) {
        const Vector u = unit_vector(m, k), qu = Q.apply(u);
        t2.expect_zero({i, j, k}, th_pp.apply(u) + th_py.apply(qu) + th_xp.apply(qu));
        t3.expect_zero({i, j, k}, th_pp.apply(qu));
        d2.expect_zero({i, j, k}, dd_pp.apply(u) + dd_py.apply(qu) + dd_xp.apply(qu));
        d3.expect_zero({i, j, k}, dd_pp.apply(qu));
      }
    }
  Report r;
  for (IdentityTally* t : {&b2, &b3, &p2, &p3, &t2, &t3, &d2, &d3}) r.append(std::move(*t).finish());
  return r;
}

Report equivalence_check(const Net& net, const Matrix& T1, const Matrix& T1tilde, const WedgePair& pair,
                         const CheckOptions& options) {
  const NetContext& ctx = net.context();
  const Matrix& T = net.map();
  check_pair(ctx, pair);
  Report r;
  r.append(summary_verdict("direction.T1", deform_check(net, T1, options)));
  r.append(summary_verdict("direction.T1tilde", deform_check(net, T1tilde, options)));
  r.append(pair_hom_conditions(ctx, pair, options));
  const std::size_t m = ctx.dim_p();
  const Matrix Q = ctx.d_theta(pair.a, pair.b);
  IdentityTally first("equivalence.first-order", options), second("equivalence.second-order", options);
  for (std::size_t k = 0; k < m; ++k) {
    const Vector u = unit_vector(m, k);
    first.compare({k}, T1tilde.apply(u) + ctx.L()(pair.a, pair.b, T.apply(u)), T1.apply(u) + T.apply(Q.apply(u)));
    second.compare({k}, ctx.L()(pair.a, pair.b, T1tilde.apply(u)), T1.apply(Q.apply(u)));
  }
  r.append(std::move(first).finish());
  r.append(std::move(second).finish());
  return r;
}

Report nijenhuis_check(const Net& net, const WedgePair& pair, const CheckOptions& options) {
  const NetContext& ctx = net.context();
  Report r = pair_hom_conditions(ctx, pair, options);
  const Matrix im = partial0(net, pair.a, pair.b);
  IdentityTally t("nijenhuis.condition", options);
  for (std::size_t k = 0; k < ctx.dim_p(); ++k) t.expect_zero({k}, ctx.L()(pair.a, pair.b, im.column(k)));
  r.append(std::move(t).finish());
  return r;
}

Matrix trivial_deform(const Net& net, const WedgePair& pair) {
  const Report nij = nijenhuis_check(net, pair);
  if (!nij.pass()) throw AxiomError("pair is not a Nijenhuis element", nij);
  Matrix T1 = partial0(net, pair.a, pair.b);
  if (!deform_check(net, T1).pass()) throw InternalError("Nijenhuis direction does not generate a deformation");
  const Matrix zero(T1.rows(), T1.cols());
  if (!equivalence_check(net, zero, T1, pair).pass())
    throw InternalError("Nijenhuis direction is not equivalent to the zero deformation");
  return T1;
}

}  // namespace netlts
