#include "cohomology/leibniz_rep.hpp"

#include "exact/errors.hpp"

namespace netlts {

LeibnizRep::LeibnizRep(ThreeLeibnizAlgebra algebra, std::size_t space_dim)
    : algebra_(std::move(algebra)), v_(space_dim) {
  const std::size_t m = algebra_.dim();
  left_.assign(m * m, Matrix(v_, v_));
  middle_ = left_;
  right_ = left_;
}

void LeibnizRep::check(const Matrix& m) const {
  if (m.rows() != v_ || m.cols() != v_) throw InputError("action matrix has the wrong shape");
}

void LeibnizRep::set_left(std::size_t i, std::size_t j, Matrix m) {
  check(m);
  left_.at(i * algebra_dim() + j) = std::move(m);
}

void LeibnizRep::set_middle(std::size_t i, std::size_t k, Matrix m) {
  check(m);
  middle_.at(i * algebra_dim() + k) = std::move(m);
}

void LeibnizRep::set_right(std::size_t j, std::size_t k, Matrix m) {
  check(m);
  right_.at(j * algebra_dim() + k) = std::move(m);
}

Vector LeibnizRep::apply_family(const std::vector<Matrix>& fam, const Vector& a, const Vector& b,
                                const Vector& u) const {
  const std::size_t m = algebra_dim();
  if (a.size() != m || b.size() != m || u.size() != v_) throw InputError("action applied to vectors of the wrong size");
  Vector out(v_);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      add_scaled(out, a[i] * b[j], fam[i * m + j].apply(u));
    }
  }
  return out;
}

Vector LeibnizRep::rho_l(const Vector& x, const Vector& y, const Vector& u) const {
  return apply_family(left_, x, y, u);
}

Vector LeibnizRep::rho_m(const Vector& x, const Vector& u, const Vector& z) const {
  return apply_family(middle_, x, z, u);
}

Vector LeibnizRep::rho_r(const Vector& u, const Vector& y, const Vector& z) const {
  return apply_family(right_, y, z, u);
}

LeibnizRep zero_rep(const ThreeLeibnizAlgebra& g, std::size_t space_dim) { return LeibnizRep(g, space_dim); }

LeibnizRep regular_rep(const ThreeLeibnizAlgebra& g) {
  const std::size_t m = g.dim();
  LeibnizRep rep(g, m);
  const TriBracket& b = g.bracket();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix l(m, m), mid(m, m), r(m, m);
      for (std::size_t u = 0; u < m; ++u) {
        l.set_column(u, b.at(i, j, u));
        mid.set_column(u, b.at(i, u, j));
        r.set_column(u, b.at(u, i, j));
      }
      rep.set_left(i, j, std::move(l));
      rep.set_middle(i, j, std::move(mid));
      rep.set_right(i, j, std::move(r));
    }
  return rep;
}

Report verify_leibniz_rep(const LeibnizRep& rep, const CheckOptions& options) {
  const std::size_t m = rep.algebra_dim(), v = rep.space_dim();
  const ThreeLeibnizAlgebra& g = rep.algebra();
  const auto e = [m](std::size_t i) { return unit_vector(m, i); };
  const auto f = [v](std::size_t i) { return unit_vector(v, i); };
  IdentityTally t1("rep.left-left", options), t2("rep.left-middle", options), t3("rep.left-right", options),
      t4("rep.middle-bracket", options), t5("rep.right-bracket", options);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
          for (std::size_t u = 0; u < v; ++u) {
            const Vector A = e(a), B = e(b), X = e(x), Y = e(y), U = f(u);
            const Vector abx = g(A, B, X), aby = g(A, B, Y);
            // x, y double as the last algebra slot z in the middle/right identities
            Vector lhs = rep.rho_l(A, B, rep.rho_l(X, Y, U));
            Vector rhs = rep.rho_l(abx, Y, U) + rep.rho_l(X, aby, U) + rep.rho_l(X, Y, rep.rho_l(A, B, U));
            t1.compare({a, b, x, y, u}, lhs, rhs);

            lhs = rep.rho_l(A, B, rep.rho_m(X, U, Y));
            rhs = rep.rho_m(abx, U, Y) + rep.rho_m(X, rep.rho_l(A, B, U), Y) + rep.rho_m(X, U, aby);
            t2.compare({a, b, x, u, y}, lhs, rhs);

            lhs = rep.rho_l(A, B, rep.rho_r(U, X, Y));
            rhs = rep.rho_r(rep.rho_l(A, B, U), X, Y) + rep.rho_r(U, abx, Y) + rep.rho_r(U, X, aby);
            t3.compare({a, b, u, x, y}, lhs, rhs);
          }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t u = 0; u < v; ++u)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
          for (std::size_t z = 0; z < m; ++z) {
            const Vector A = e(a), U = f(u), X = e(x), Y = e(y), Z = e(z);
            const Vector xyz = g(X, Y, Z);
            Vector lhs = rep.rho_m(A, U, xyz);
            Vector rhs = rep.rho_r(rep.rho_m(A, U, X), Y, Z) + rep.rho_m(X, rep.rho_m(A, U, Y), Z) +
                         rep.rho_l(X, Y, rep.rho_m(A, U, Z));
            t4.compare({a, u, x, y, z}, lhs, rhs);

            lhs = rep.rho_r(U, A, xyz);
            rhs = rep.rho_r(rep.rho_r(U, A, X), Y, Z) + rep.rho_m(X, rep.rho_r(U, A, Y), Z) +
                  rep.rho_l(X, Y, rep.rho_r(U, A, Z));
            t5.compare({u, a, x, y, z}, lhs, rhs);
          }
  Report r;
  r.append(std::move(t1).finish());
  r.append(std::move(t2).finish());
  r.append(std::move(t3).finish());
  r.append(std::move(t4).finish());
  r.append(std::move(t5).finish());
  return r;
}

LeibnizRep induced_rep(const Net& net) {
  const NetContext& ctx = net.context();
  const Matrix& T = net.map();
  const std::size_t n = ctx.dim(), m = ctx.dim_p();
  LeibnizRep rep(descendent(net), n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector Ti = T.column(i), Tj = T.column(j), ej = unit_vector(m, j);
      Matrix l(n, n), mid(n, n), r(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        const Vector X = unit_vector(n, x);
        l.set_column(x, ctx.L()(Ti, Tj, X));
        mid.set_column(x, ctx.L()(Ti, X, Tj) - T.apply(ctx.d_apply(Ti, X, ej)));
        r.set_column(x, ctx.L()(X, Ti, Tj) - T.apply(ctx.d_apply(X, Ti, ej)));
      }
      rep.set_left(i, j, std::move(l));
      rep.set_middle(i, j, std::move(mid));
      rep.set_right(i, j, std::move(r));
    }
  if (!verify_leibniz_rep(rep).pass()) throw InternalError("induced representation fails the representation identities");
  return rep;
}

}  // namespace netlts
