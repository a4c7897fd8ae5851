#include "support/cohomology_oracle.hpp"

#include "support/oracles.hpp"

namespace oracle {

using netlts::Matrix;
using netlts::NetContext;
using netlts::Rational;
using netlts::Vector;

namespace {

struct Env {
  const NetContext& ctx;
  const Matrix& T;
  std::size_t n, m;

  Vector e(std::size_t i) const { return netlts::unit_vector(m, i); }
  // D(x,y)w = theta(y,x)w - theta(x,y)w, from the action tensor directly
  Vector D(const Vector& x, const Vector& y, const Vector& w) const {
    const auto& act = ctx.action();
    return act.theta(y, x).apply(w) - act.theta(x, y).apply(w);
  }
  Vector desc(const Vector& u, const Vector& v, const Vector& w) const {
    return D(T.apply(u), T.apply(v), w) + ctx.Lp()(u, v, w);
  }
  Vector L(const Vector& a, const Vector& b, const Vector& c) const { return ctx.L()(a, b, c); }
  Vector rl(const Vector& u, const Vector& v, const Vector& x) const { return L(T.apply(u), T.apply(v), x); }
  Vector rm(const Vector& u, const Vector& x, const Vector& v) const {
    return L(T.apply(u), x, T.apply(v)) - T.apply(D(T.apply(u), x, v));
  }
  Vector rr(const Vector& x, const Vector& u, const Vector& v) const {
    return L(x, T.apply(u), T.apply(v)) - T.apply(D(x, T.apply(u), v));
  }
};

// a 2-cochain as a full tensor F[(i*m + j)*m + k], antisymmetric in i, j
struct Full2 {
  std::size_t m;
  std::vector<Vector> v;
  Vector at(const Vector& a, const Vector& b, const Vector& w, std::size_t out) const {
    Vector r(out);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          const Rational c = a[i] * b[j] * w[k];
          if (c.is_zero()) continue;
          netlts::add_scaled(r, c, v[(i * m + j) * m + k]);
        }
    return r;
  }
};

void append_rows(std::vector<std::vector<Rational>>& cols, const Vector& value) {
  cols.back().insert(cols.back().end(), value.begin(), value.end());
}

Matrix from_cols(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix out(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) out(r, c) = cols[c][r];
  return out;
}

Vector apply1(const Env& env, const Matrix& f, std::size_t u, std::size_t v, std::size_t w) {
  const Vector U = env.e(u), V = env.e(v), W = env.e(w);
  const Vector Tu = env.T.apply(U), Tv = env.T.apply(V), Tw = env.T.apply(W);
  const Vector fu = f.apply(U), fv = f.apply(V), fw = f.apply(W);
  Vector out = Rational(-1) * f.apply(env.desc(U, V, W));
  out = out + env.L(Tu, Tv, fw) + env.L(Tu, fv, Tw) - env.T.apply(env.D(Tu, fv, W));
  out = out + env.L(fu, Tv, Tw) - env.T.apply(env.D(fu, Tv, W));
  return out;
}

}  // namespace

Vector partial1_expanded(const NetContext& ctx, const Matrix& T, const Matrix& f, std::size_t u, std::size_t v,
                         std::size_t w) {
  const Env env{ctx, T, ctx.dim(), ctx.dim_p()};
  return apply1(env, f, u, v, w);
}

OracleDims cohomology_oracle(const NetContext& ctx, const Matrix& T) {
  const Env env{ctx, T, ctx.dim(), ctx.dim_p()};
  const std::size_t n = env.n, m = env.m;
  OracleDims d;

  // d0: (a,b) -> (u -> T D(a,b)u - [a,b,Tu]), evaluated on all ordered pairs
  std::vector<std::vector<Rational>> cols;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      cols.emplace_back();
      const Vector A = netlts::unit_vector(n, a), B = netlts::unit_vector(n, b);
      for (std::size_t u = 0; u < m; ++u)
        append_rows(cols, T.apply(env.D(A, B, env.e(u))) - env.L(A, B, T.apply(env.e(u))));
    }
  d.rank0 = bareiss_rank(from_cols(cols));

  // d1 on every matrix unit f = E_{rc}
  cols.clear();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Matrix f(n, m);
      f(r, c) = Rational(1);
      cols.emplace_back();
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
          for (std::size_t w = 0; w < m; ++w) append_rows(cols, apply1(env, f, u, v, w));
    }
  d.dim_c1 = n * m;
  d.rank1 = bareiss_rank(from_cols(cols));

  // d2 on the antisymmetric basis tensors
  cols.clear();
  std::size_t dim_c2 = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          ++dim_c2;
          Full2 F{m, std::vector<Vector>(m * m * m, Vector(n))};
          F.v[(i * m + j) * m + k][r] = Rational(1);
          F.v[(j * m + i) * m + k][r] = Rational(-1);
          const auto f1 = [&](const Vector& a, const Vector& b, const Vector& w) { return F.at(a, b, w, n); };
          cols.emplace_back();
          for (std::size_t u1 = 0; u1 < m; ++u1)
            for (std::size_t v1 = u1 + 1; v1 < m; ++v1)
              for (std::size_t u2 = 0; u2 < m; ++u2)
                for (std::size_t v2 = u2 + 1; v2 < m; ++v2)
                  for (std::size_t w = 0; w < m; ++w) {
                    const Vector U1 = env.e(u1), V1 = env.e(v1), U2 = env.e(u2), V2 = env.e(v2), W = env.e(w);
                    Vector val = Rational(-1) * (f1(U2, env.desc(U1, V1, V2), W) + f1(env.desc(U1, V1, U2), V2, W));
                    val = val - f1(U2, V2, env.desc(U1, V1, W)) + f1(U1, V1, env.desc(U2, V2, W));
                    val = val + env.rl(U1, V1, f1(U2, V2, W)) - env.rl(U2, V2, f1(U1, V1, W));
                    val = val - env.rm(U2, f1(U1, V1, V2), W) - env.rr(f1(U1, V1, U2), V2, W);
                    append_rows(cols, val);
                  }
        }
  d.dim_c2 = dim_c2;
  d.rank2 = bareiss_rank(from_cols(cols));
  return d;
}

}  // namespace oracle
