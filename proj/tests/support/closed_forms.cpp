#include "support/closed_forms.hpp"

namespace oracle {

using netlts::Matrix;
using netlts::NetContext;
using netlts::Vector;

std::pair<Vector, Vector> split_basis(const NetContext& ctx, std::size_t k) {
  const std::size_t n = ctx.dim(), m = ctx.dim_p();
  Vector a(n), u(m);
  if (k < n)
    a[k] = 1;
  else
    u[k - n] = 1;
  return {a, u};
}

namespace {

Vector join(const Vector& x, const Vector& y) {
  Vector out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

Vector delta_t_closed(const NetContext& ctx, const Matrix& T, std::size_t i, std::size_t j, std::size_t k) {
  const auto [a, u] = split_basis(ctx, i);
  const auto [b, v] = split_basis(ctx, j);
  const auto [c, w] = split_basis(ctx, k);
  const Vector Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
  const auto& L = ctx.L();
  Vector first = L(Tu, b, c) + L(a, b, Tw) + L(a, Tv, c);
  first = first - T.apply(ctx.d_apply(a, b, w) + ctx.Lp()(u, v, w));
  const Vector second = ctx.d_apply(a, Tv, w) + ctx.d_apply(Tu, b, w);
  return join(first, second);
}

Vector delta_tt_closed(const NetContext& ctx, const Matrix& T, std::size_t i, std::size_t j, std::size_t k) {
  const auto [a, u] = split_basis(ctx, i);
  const auto [b, v] = split_basis(ctx, j);
  const auto [c, w] = split_basis(ctx, k);
  const Vector Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
  const auto& L = ctx.L();
  Vector first = L(Tu, Tv, c) + L(Tu, b, Tw) + L(a, Tv, Tw);
  first = first - T.apply(ctx.d_apply(Tu, b, w) + ctx.d_apply(a, Tv, w));
  const Vector second = ctx.d_apply(Tu, Tv, w);
  return netlts::Rational(2) * join(first, second);
}

Vector fundamental_defect(const netlts::TriBracket& pi, std::size_t x1, std::size_t y1, std::size_t x2, std::size_t y2,
                          std::size_t x) {
  const std::size_t n = pi.dim();
  const auto e = [n](std::size_t i) { return netlts::unit_vector(n, i); };
  Vector out = pi.apply(pi.at(x1, y1, x2), e(y2), e(x));
  out = out + pi.apply(e(x2), pi.at(x1, y1, y2), e(x));
  out = out + pi.apply(e(x2), e(y2), pi.at(x1, y1, x));
  out = out - pi.apply(e(x1), e(y1), pi.at(x2, y2, x));
  return out;
}

}  // namespace oracle
