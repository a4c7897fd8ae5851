#include "cohomology/coboundary.hpp"

#include <algorithm>
#include <thread>

#include "exact/errors.hpp"
#include "graded/derived.hpp"

namespace netlts {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Cochain delta_n(const LeibnizRep& rep, const Cochain& f) {
  const std::size_t m = rep.algebra_dim(), v = rep.space_dim();
  if (f.in_dim() != m || f.out_dim() != v) throw InputError("cochain does not match the representation");
  const std::size_t n = f.arity();
  if (n + 1 > kMaxArity) throw InputError("cochain arity too large");
  const ThreeLeibnizAlgebra& g = rep.algebra();
  const WedgeBasis& wb = f.wedges();
  Cochain out(m, v, n + 1, f.space());
  const auto e = [m](std::size_t i) { return unit_vector(m, i); };

  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const ArgTuple a = out.tuple(t);
    std::vector<Vector> xs(n), ys(n);
    std::vector<WedgeVector> basis(n);
    for (std::size_t s = 0; s < n; ++s) {
      const WedgeIndex w = wb.pair(a.pairs[s]);
      xs[s] = e(w.i);
      ys[s] = e(w.j);
      basis[s] = wb.basis_element(a.pairs[s]);
    }
    const Vector z = e(a.last);
    const auto without = [&](std::size_t j) {
      std::vector<WedgeVector> r;
      for (std::size_t s = 0; s < n; ++s)
        if (s != j) r.push_back(basis[s]);
      return r;
    };
    Vector value(v);
    // 1-based sign conventions: slot s here is X_{s+1}
    for (std::size_t j = 0; j < n; ++j) {
      const Rational sj = (j + 1) % 2 ? Rational(-1) : Rational(1);
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<WedgeVector> args = without(j);
        WedgeVector slot = wb.wedge(xs[k], g(xs[j], ys[j], ys[k]));
        for (auto& term : wb.wedge(g(xs[j], ys[j], xs[k]), ys[k])) slot.push_back(term);
        args[k - 1] = std::move(slot);
        add_scaled(value, sj, f.eval_wedges(args, z));
      }
      add_scaled(value, sj, f.eval_wedges(without(j), g(xs[j], ys[j], z)));
      add_scaled(value, Rational(-1) * sj, rep.rho_l(xs[j], ys[j], f.eval_wedges(without(j), z)));
    }
    const std::vector<WedgeVector> head(basis.begin(), basis.end() - 1);
    const Rational tail = (n + 1) % 2 ? Rational(-1) : Rational(1);
    Vector last = rep.rho_m(xs[n - 1], f.eval_wedges(head, ys[n - 1]), z);
    last = last + rep.rho_r(f.eval_wedges(head, xs[n - 1]), ys[n - 1], z);
    add_scaled(value, tail, last);
    out.set(t, std::move(value));
  }
  return out;
}

Matrix partial0(const Net& net, const Vector& a, const Vector& b) {
  const NetContext& ctx = net.context();
  const Matrix& T = net.map();
  if (a.size() != ctx.dim() || b.size() != ctx.dim()) throw InputError("partial0 arguments must lie in L");
  Matrix out(ctx.dim(), ctx.dim_p());
  for (std::size_t k = 0; k < ctx.dim_p(); ++k) {
    const Vector u = unit_vector(ctx.dim_p(), k);
    out.set_column(k, T.apply(ctx.d_apply(a, b, u)) - ctx.L()(a, b, T.apply(u)));
  }
  return out;
}

Vector cochain_coordinates(const Cochain& f) {
  Vector out;
  out.reserve(f.tuple_count() * f.out_dim());
  for (std::size_t t = 0; t < f.tuple_count(); ++t) out.insert(out.end(), f.at(t).begin(), f.at(t).end());
  return out;
}

Cochain cochain_from_coordinates(const Vector& coords, std::size_t in_dim, std::size_t out_dim, std::size_t arity) {
  Cochain f(in_dim, out_dim, arity, Cochain::Space::F);
  if (coords.size() != f.tuple_count() * out_dim) throw InputError("coordinate vector has the wrong length");
  for (std::size_t t = 0; t < f.tuple_count(); ++t)
    f.set(t, Vector(coords.begin() + static_cast<long>(t * out_dim), coords.begin() + static_cast<long>((t + 1) * out_dim)));
  return f;
}

std::size_t cochain_space_dim(const NetContext& ctx, std::size_t n) {
  const std::size_t n_l = ctx.dim(), m = ctx.dim_p();
  if (n == 0) return n_l * (n_l - (n_l > 0)) / 2;
  return ipow(m * (m - (m > 0)) / 2, n - 1) * m * n_l;
}

Matrix coboundary_matrix(const Net& net, std::size_t n) {
  if (n > kMaxCoboundaryDegree) throw InputError("unsupported coboundary degree");
  if (n == 0) return coboundary_matrix(net, LeibnizRep(descendent(net), net.context().dim()), 0);
  return coboundary_matrix(net, induced_rep(net), n);
}

Matrix coboundary_matrix(const Net& net, const LeibnizRep& rep, std::size_t n) {
  if (n > kMaxCoboundaryDegree) throw InputError("unsupported coboundary degree");
  const NetContext& ctx = net.context();
  const std::size_t n_l = ctx.dim(), m = ctx.dim_p();
  const std::size_t rows = cochain_space_dim(ctx, n + 1), cols = cochain_space_dim(ctx, n);
  Matrix out(rows, cols);
  if (n == 0) {
    const WedgeBasis wb(n_l);
    for (std::size_t c = 0; c < cols; ++c) {
      const WedgeIndex w = wb.pair(c);
      const Matrix im = partial0(net, unit_vector(n_l, w.i), unit_vector(n_l, w.j));
      out.set_column(c, cochain_coordinates(Cochain::from_matrix(im, Cochain::Space::F)));
    }
    return out;
  }
  if (rep.algebra_dim() != m || rep.space_dim() != n_l) throw InputError("representation does not match the net");
  // columns are independent; each worker fills a strided subset
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), cols / 8));
  const auto work = [&](std::size_t start) {
    for (std::size_t c = start; c < cols; c += workers) {
      Vector coords(cols);
      coords[c] = 1;
      out.set_column(c, cochain_coordinates(delta_n(rep, cochain_from_coordinates(coords, m, n_l, n))));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  return out;
}

CohomologyReport cohomology_dims(const Net& net, std::size_t n, const CohomologyOptions& options) {
  if (n < 1 || n > (options.allow_degree3 ? 3u : 2u)) throw InputError("unsupported cohomology degree " + std::to_string(n) + (n == 3 ? " (degree 3 must be enabled explicitly)" : ""));
  const LeibnizRep rep = induced_rep(net);
  const Matrix d0 = coboundary_matrix(net, rep, 0);
  const Matrix dn = coboundary_matrix(net, rep, n);
  const Matrix dprev = n == 1 ? d0 : coboundary_matrix(net, rep, n - 1);
  CohomologyReport r;
  r.n = n;
  r.dim_c = dn.cols();
  const std::size_t rank_n = rank(dn);
  r.dim_z = r.dim_c - rank_n;
  r.dim_b = rank(dprev);
  if (r.dim_b > r.dim_z) throw InternalError("coboundaries exceed cocycles");
  r.dim_h = r.dim_z - r.dim_b;
  r.degree0_kernel = d0.cols() - rank(d0);
  if (options.cocycle_basis) r.cocycle_basis = nullspace(dn);
  return r;
}

Verdict compare_with_dT(const Net& net, const Cochain& f, const CheckOptions& options) {
  const NetContext& ctx = net.context();
  if (f.in_dim() != ctx.dim_p() || f.out_dim() != ctx.dim()) throw InputError("cochain does not map L' arguments to L values");
  if (f.arity() < 1 || f.arity() > 2) throw InputError("comparison supports arity 1 and 2");
  Cochain g = f;
  g.set_space(Cochain::Space::F);
  const Cochain lhs = delta_n(induced_rep(net), g);
  const DerivedBrackets db(net.context_ptr());
  const TwistedBrackets tw(db, net.map());
  const Rational sign = f.arity() % 2 ? Rational(1) : Rational(-1);
  const Cochain rhs = sign * tw.dT(g);
  IdentityTally tally("cohomology.matches-dT", options);
  for (std::size_t t = 0; t < lhs.tuple_count(); ++t) {
    const ArgTuple a = lhs.tuple(t);
    std::vector<std::size_t> idx = a.pairs;
    idx.push_back(a.last);
    tally.compare(std::move(idx), lhs.at(t), rhs.at(t));
  }
  return std::move(tally).finish();
}

}  // namespace netlts
