#include "graded/derived.hpp"

namespace netlts {

DerivedBrackets::DerivedBrackets(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InputError("null context");
  delta_ = Cochain::from_bracket(ctx_->product(), Cochain::Space::E);
  delta_node_ = leaf(delta_);
}

void DerivedBrackets::check_f(const Cochain& f) const {
  if (f.in_dim() != ctx_->dim_p() || f.out_dim() != ctx_->dim())
    throw InputError("cochain does not map L' arguments to L values");
}

Cochain DerivedBrackets::from_map(const Matrix& T) const {
  ctx_->check_map_shape(T);
  return Cochain::from_matrix(T, Cochain::Space::F);
}

Cochain DerivedBrackets::include(const Cochain& f) const {
  check_f(f);
  const std::size_t n = ctx_->dim(), N = dim_e();
  Cochain out(N, N, f.arity(), Cochain::Space::E);
  const WedgeBasis& fw = f.wedges();
  const WedgeBasis& ew = out.wedges();
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    const Vector& v = f.at(t);
    if (is_zero(v)) continue;
    ArgTuple a = f.tuple(t);
    for (auto& p : a.pairs) {
      const WedgeIndex w = fw.pair(p);
      p = ew.canonical(n + w.i, n + w.j)->index;
    }
    a.last += n;
    Vector full(N);
    for (std::size_t l = 0; l < n; ++l) full[l] = v[l];
    out.set(a, std::move(full));
  }
  return out;
}

namespace {

template <typename Lookup>
Cochain project_with(const NetContext& ctx, std::size_t arity, Lookup&& lookup) {
  const std::size_t n = ctx.dim(), m = ctx.dim_p();
  Cochain out(m, n, arity, Cochain::Space::F);
  const WedgeBasis ew(n + m);
  const WedgeBasis& fw = out.wedges();
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    ArgTuple a = out.tuple(t);
    for (auto& p : a.pairs) {
      const WedgeIndex w = fw.pair(p);
      p = ew.canonical(n + w.i, n + w.j)->index;
    }
    a.last += n;
    const Vector& v = lookup(a);
    out.set(t, Vector(v.begin(), v.begin() + static_cast<long>(n)));
  }
  return out;
}

}  // namespace

Cochain DerivedBrackets::project(const Cochain& g) const {
  if (g.in_dim() != dim_e() || g.out_dim() != dim_e()) throw InputError("cochain does not live on E");
  return project_with(*ctx_, g.arity(), [&](const ArgTuple& a) -> const Vector& { return g.at(a); });
}

Cochain DerivedBrackets::project(const CochainNode& g) const {
  if (g.dim() != dim_e()) throw InputError("cochain does not live on E");
  return project_with(*ctx_, g.degree() + 1,
                      [&](const ArgTuple& a) -> const Vector& { return g.entry(g.flat(a.pairs, a.last)); });
}

Cochain DerivedBrackets::l1(const Cochain& f) const {
  const NodePtr node = bracket_node(delta_node_, leaf(include(f)));
  return project(*node);
}

Cochain DerivedBrackets::l2(const Cochain& f, const Cochain& g) const {
  const NodePtr node = bracket_node(bracket_node(delta_node_, leaf(include(f))), leaf(include(g)));
  return project(*node);
}

Cochain DerivedBrackets::l3(const Cochain& f, const Cochain& g, const Cochain& h) const {
  const NodePtr inner = bracket_node(bracket_node(delta_node_, leaf(include(f))), leaf(include(g)));
  return project(*bracket_node(inner, leaf(include(h))));
}

Cochain DerivedBrackets::l4(const Cochain& f, const Cochain& g, const Cochain& h, const Cochain& k) const {
  const NodePtr inner = bracket_node(bracket_node(delta_node_, leaf(include(f))), leaf(include(g)));
  return project(*bracket_node(bracket_node(inner, leaf(include(h))), leaf(include(k))));
}

Cochain DerivedBrackets::mc_residual(const Matrix& T) const {
  const Cochain t = from_map(T);
  const NodePtr t_hat = leaf(include(t));
  const NodePtr dt = bracket_node(delta_node_, t_hat);
  Cochain out = project(*dt);
  out += Rational(1, 6) * project(*bracket_node(bracket_node(dt, t_hat), t_hat));
  return out;
}

TwistedBrackets::TwistedBrackets(const DerivedBrackets& base, const Matrix& T) : base_(base), T_(T) {
  const Report r = net_check(base.context(), T);
  if (!r.pass()) throw AxiomError("twisting requires a nonabelian embedding tensor", r);
  t_hat_ = leaf(base.include(base.from_map(T)));
  delta_t_ = bracket_node(base.delta_node(), t_hat_);
  delta_tt_ = bracket_node(delta_t_, t_hat_);
}

Cochain TwistedBrackets::l1T(const Cochain& f) const {
  Cochain out = base_.l1(f);
  out += Rational(1, 2) * base_.project(*bracket_node(delta_tt_, leaf(base_.include(f))));
  return out;
}

Cochain TwistedBrackets::l2T(const Cochain& f, const Cochain& g) const {
  const NodePtr inner = bracket_node(delta_t_, leaf(base_.include(f)));
  return base_.project(*bracket_node(inner, leaf(base_.include(g))));
}

Cochain TwistedBrackets::l3T(const Cochain& f, const Cochain& g, const Cochain& h) const { return base_.l3(f, g, h); }

Cochain TwistedBrackets::mc_residual(const Matrix& Tt) const {
  const Cochain t = base_.from_map(Tt);
  const NodePtr t_hat = leaf(base_.include(t));
  Cochain out = l1T(t);
  const NodePtr dtt = bracket_node(delta_t_, t_hat);
  out += Rational(1, 2) * base_.project(*bracket_node(dtt, t_hat));
  const NodePtr d1 = bracket_node(bracket_node(base_.delta_node(), t_hat), t_hat);
  out += Rational(1, 6) * base_.project(*bracket_node(d1, t_hat));
  return out;
}

}  // namespace netlts
