#include "algebra/embedding.hpp"

namespace netlts {

NetContext::NetContext(LieTripleSystem L, LieTripleSystem Lp, ActionTensor act)
    : L_(std::move(L)), Lp_(std::move(Lp)), act_(std::move(act)) {
  const std::size_t n = L_.dim();
  d_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d_.push_back(act_.d_theta(i, j));
  product_ = hemisemidirect_bracket(L_.bracket(), Lp_.bracket(), act_);
}

std::shared_ptr<const NetContext> NetContext::make(LieTripleSystem L, LieTripleSystem Lp, ActionTensor act) {
  const Report coherent = verify_coherent_action(L, Lp, act);
  if (!coherent.pass())
    throw AxiomError("action is not coherent (" + coherent.first_failure()->identity + ")", coherent);
  return std::shared_ptr<const NetContext>(new NetContext(std::move(L), std::move(Lp), std::move(act)));
}

Vector NetContext::d_apply(const Vector& x, const Vector& y, const Vector& w) const {
  const std::size_t n = dim();
  Vector out(dim_p());
  Vector tmp;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      add_scaled(out, x[i] * y[j], d_[i * n + j].apply(w));
    }
  }
  return out;
}

bool NetContext::is_l3_adjoint() const {
  const TriBracket l3 = l3_system().bracket();
  return L_.bracket() == l3 && Lp_.bracket() == l3 && act_ == ActionTensor::adjoint(l3);
}

void NetContext::check_map_shape(const Matrix& T) const {
  if (T.rows() != dim() || T.cols() != dim_p())
    throw InputError("map must be " + std::to_string(dim()) + "x" + std::to_string(dim_p()) + ", got " +
                     std::to_string(T.rows()) + "x" + std::to_string(T.cols()));
}

Report net_check(const NetContext& ctx, const Matrix& T, const CheckOptions& options) {
  ctx.check_map_shape(T);
  const std::size_t m = ctx.dim_p();
  std::vector<Vector> images(m);
  for (std::size_t u = 0; u < m; ++u) images[u] = T.column(u);
  IdentityTally tally("net.equation", options);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        const Vector lhs = ctx.L()(images[u], images[v], images[w]);
        const Vector inner = ctx.d_apply(images[u], images[v], unit_vector(m, w)) + ctx.Lp().bracket().at(u, v, w);
        tally.compare({u, v, w}, lhs, T.apply(inner));
      }
  Report r;
  r.append(std::move(tally).finish());
  return r;
}

Net Net::make(ContextPtr ctx, Matrix T) {
  if (!ctx) throw InputError("null context");
  const Report r = net_check(*ctx, T);
  if (!r.pass()) throw AxiomError("map is not a nonabelian embedding tensor", r);
  return Net(std::move(ctx), std::move(T));
}

bool l3_closed_form_condition(const Matrix& T) {
  if (T.rows() != 3 || T.cols() != 3) throw InputError("closed-form condition needs a 3x3 map");
  const Rational &a1 = T(0, 0), &a2 = T(1, 0);
  const Rational &b1 = T(0, 1), &b2 = T(1, 1);
  const Rational &c1 = T(0, 2), &c2 = T(1, 2), &c3 = T(2, 2);
  if (!c1.is_zero() || !c2.is_zero()) return false;
  const Rational lhs = a1 * a1 * b2 - a1 * a2 * b1;
  const Rational rhs = c3 * (a1 * b2 - a2 * b1 + Rational(1));
  return lhs == rhs;
}

std::vector<GridRow> parametric_grid_check(const NetContext& ctx, const std::vector<Matrix>& samples) {
  if (!ctx.is_l3_adjoint()) throw InputError("parametric grid check requires the L3 adjoint context");
  std::vector<GridRow> rows;
  rows.reserve(samples.size());
  for (const Matrix& T : samples) rows.push_back({net_check(ctx, T, CheckOptions{0}).pass(), l3_closed_form_condition(T)});
  return rows;
}

TriBracket descendent_bracket(const NetContext& ctx, const Matrix& T) {
  ctx.check_map_shape(T);
  const std::size_t m = ctx.dim_p();
  std::vector<Vector> images(m);
  for (std::size_t u = 0; u < m; ++u) images[u] = T.column(u);
  TriBracket out(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w)
        out.set(u, v, w, ctx.d_apply(images[u], images[v], unit_vector(m, w)) + ctx.Lp().bracket().at(u, v, w));
  return out;
}

ThreeLeibnizAlgebra descendent(const Net& net) {
  const NetContext& ctx = net.context();
  TriBracket b = descendent_bracket(ctx, net.map());
  if (!verify_3leibniz(b).pass()) throw InternalError("descendent bracket fails the fundamental identity");
  if (!tri_homomorphism(b, ctx.L().bracket(), net.map(), "descendent.homomorphism").pass)
    throw InternalError("net is not a homomorphism out of its descendent algebra");
  return ThreeLeibnizAlgebra::make(std::move(b), ctx.Lp().labels());
}

Report graph_subalgebra_check(const NetContext& ctx, const Matrix& T, const CheckOptions& options) {
  ctx.check_map_shape(T);
  const std::size_t n = ctx.dim(), m = ctx.dim_p();
  std::vector<Vector> graph(m);
  for (std::size_t u = 0; u < m; ++u) {
    Vector g(n + m);
    const Vector Tu = T.column(u);
    for (std::size_t l = 0; l < n; ++l) g[l] = Tu[l];
    g[n + u] = Rational(1);
    graph[u] = std::move(g);
  }
  IdentityTally tally("graph.closed", options);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        const Vector p = ctx.product().apply(graph[u], graph[v], graph[w]);
        const Vector first(p.begin(), p.begin() + static_cast<long>(n));
        const Vector second(p.begin() + static_cast<long>(n), p.end());
        tally.compare({u, v, w}, first, T.apply(second));
      }
  Report r;
  r.append(std::move(tally).finish());
  return r;
}

namespace {

Verdict theta_compatibility(const NetContext& ctx, const Matrix& f, const Matrix& fp, bool use_d,
                            const std::string& identity, const CheckOptions& options) {
  const std::size_t n = ctx.dim(), m = ctx.dim_p();
  IdentityTally tally(identity, options);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix op = use_d ? ctx.action().d_theta(x, y) : ctx.action().theta(x, y);
      const Vector fx = f.column(x), fy = f.column(y);
      const Matrix image_op = use_d ? ctx.action().d_theta(fx, fy) : ctx.action().theta(fx, fy);
      const Matrix lhs = fp * op;
      const Matrix rhs = image_op * fp;
      for (std::size_t u = 0; u < m; ++u) tally.compare({x, y, u}, lhs.column(u), rhs.column(u));
    }
  return std::move(tally).finish();
}

void check_endomorphism(const Matrix& f, std::size_t dim, const char* name) {
  if (f.rows() != dim || f.cols() != dim)
    throw InputError(std::string(name) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
}

}  // namespace

Report net_hom_check(const NetContext& ctx, const Matrix& Tsrc, const Matrix& Tdst, const Matrix& f, const Matrix& fp,
                     const CheckOptions& options) {
  ctx.check_map_shape(Tsrc);
  ctx.check_map_shape(Tdst);
  check_endomorphism(f, ctx.dim(), "f");
  check_endomorphism(fp, ctx.dim_p(), "fp");

  Report r;
  r.append(tri_homomorphism(ctx.L().bracket(), ctx.L().bracket(), f, "hom.f", options));
  r.append(tri_homomorphism(ctx.Lp().bracket(), ctx.Lp().bracket(), fp, "hom.fp", options));

  IdentityTally inter("hom.intertwining", options);
  const Matrix lhs = f * Tsrc, rhs = Tdst * fp;
  for (std::size_t u = 0; u < ctx.dim_p(); ++u) inter.compare({u}, lhs.column(u), rhs.column(u));
  r.append(std::move(inter).finish());

  r.append(theta_compatibility(ctx, f, fp, false, "hom.theta", options));
  Verdict d = theta_compatibility(ctx, f, fp, true, "hom.d-theta", options);
  if (r.verdicts.back().pass && !d.pass) throw InternalError("theta compatibility holds but D_theta compatibility fails");
  r.append(std::move(d));

  if (r.pass() && net_check(ctx, Tsrc, CheckOptions{0}).pass() && net_check(ctx, Tdst, CheckOptions{0}).pass()) {
    Verdict desc = tri_homomorphism(descendent_bracket(ctx, Tsrc), descendent_bracket(ctx, Tdst), fp,
                                    "hom.descendent", options);
    if (!desc.pass) throw InternalError("homomorphism of nets does not preserve descendent brackets");
    r.append(std::move(desc));
  }
  return r;
}

Matrix conjugate_net(const NetContext& ctx, const Matrix& T, const Matrix& f, const Matrix& fp,
                     const ConjugationOptions& options) {
  ctx.check_map_shape(T);
  check_endomorphism(f, ctx.dim(), "f");
  check_endomorphism(fp, ctx.dim_p(), "fp");
  const Report base = net_check(ctx, T);
  if (!base.pass()) throw AxiomError("input map is not a nonabelian embedding tensor", base);
  const auto f_inv = inverse(f);
  if (!f_inv) throw InputError("f is not invertible");
  if (!inverse(fp)) throw InputError("fp is not invertible");

  Report pre;
  pre.append(tri_homomorphism(ctx.L().bracket(), ctx.L().bracket(), f, "hom.f"));
  pre.append(tri_homomorphism(ctx.Lp().bracket(), ctx.Lp().bracket(), fp, "hom.fp"));
  pre.append(theta_compatibility(ctx, f, fp, false, "hom.theta", {}));
  if (options.require_intertwining) {
    IdentityTally inter("hom.intertwining", {});
    const Matrix lhs = f * T, rhs = T * fp;
    for (std::size_t u = 0; u < ctx.dim_p(); ++u) inter.compare({u}, lhs.column(u), rhs.column(u));
    pre.append(std::move(inter).finish());
  }
  if (!pre.pass()) throw AxiomError("conjugation hypotheses fail (" + pre.first_failure()->identity + ")", pre);

  Matrix out = *f_inv * T * fp;
  if (!net_check(ctx, out, CheckOptions{0}).pass()) throw InternalError("conjugate map fails the defining equation");
  return out;
}

}  // namespace netlts
