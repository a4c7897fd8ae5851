#include "doctest.h"

#include "graded/derived.hpp"
#include "support/closed_forms.hpp"
#include "support/oracles.hpp"

using namespace netlts;

namespace {

ContextPtr l3_context() {
  const LieTripleSystem l3 = l3_system();
  return NetContext::make(l3, l3, ActionTensor::adjoint(l3.bracket()));
}

ContextPtr l3_trivial_context() {
  const LieTripleSystem l3 = l3_system();
  return NetContext::make(l3, l3, ActionTensor::zero(3, 3));
}

Matrix t_star() { return Matrix::diagonal({Rational(2), Rational(1, 2), Rational(1)}); }

Matrix t_one() {
  Matrix m(3, 3);
  m(2, 0) = Rational(-1);
  return m;
}

Vector at3(const Cochain& c, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = c.in_dim();
  return c.eval({{unit_vector(n, i), unit_vector(n, j)}}, unit_vector(n, k));
}

TriBracket planted_failure() {
  TriBracket b(2);
  b.set(0, 1, 0, 0, Rational(1));
  b.set(1, 0, 0, 0, Rational(-1));
  return b;
}

}  // namespace

TEST_CASE("degree-zero composition is matrix product") {
  std::mt19937 rng(7);
  for (int round = 0; round < 5; ++round) {
    const Matrix A = oracle::random_matrix(3, 3, rng), B = oracle::random_matrix(3, 3, rng);
    CHECK(circ(Cochain::from_matrix(A), Cochain::from_matrix(B)).to_matrix() == A * B);
    CHECK(bracket_3la(Cochain::from_matrix(A), Cochain::from_matrix(B)).to_matrix() == A * B - B * A);
  }
}

TEST_CASE("self-bracket of a skew bracket is twice the fundamental defect") {
  std::mt19937 rng(11);
  std::vector<TriBracket> samples = {planted_failure(), l3_system().bracket()};
  for (int round = 0; round < 2; ++round) {
    TriBracket b(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const Vector v = oracle::random_matrix(3, 1, rng).column(0);
          b.set(i, j, k, v);
          b.set(j, i, k, Rational(-1) * v);
        }
    samples.push_back(b);
  }
  for (const TriBracket& pi : samples) {
    const Cochain P = Cochain::from_bracket(pi);
    const Cochain pp = bracket_3la(P, P);
    CHECK(pp == Rational(2) * circ(P, P));
    const std::size_t n = pi.dim();
    for (std::size_t x1 = 0; x1 < n; ++x1)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t x2 = 0; x2 < n; ++x2)
          for (std::size_t y2 = 0; y2 < n; ++y2)
            for (std::size_t x = 0; x < n; ++x) {
              const Vector got = pp.eval({{unit_vector(n, x1), unit_vector(n, y1)},
                                          {unit_vector(n, x2), unit_vector(n, y2)}},
                                         unit_vector(n, x));
              CHECK(got == Rational(2) * oracle::fundamental_defect(pi, x1, y1, x2, y2, x));
            }
  }
  CHECK_FALSE(bracket_3la(Cochain::from_bracket(planted_failure()), Cochain::from_bracket(planted_failure())).is_zero());
}

TEST_CASE("graded antisymmetry and Jacobi on random cochains") {
  std::mt19937 rng(2024);
  const std::size_t n = 3;
  const std::vector<std::array<std::size_t, 3>> degrees = {{0, 1, 1}, {1, 1, 1}, {1, 0, 2}, {2, 1, 1}, {0, 2, 2}};
  for (const auto& d : degrees) {
    const Cochain P = oracle::random_cochain(n, n, d[0] + 1, rng);
    const Cochain Q = oracle::random_cochain(n, n, d[1] + 1, rng);
    const Cochain R = oracle::random_cochain(n, n, d[2] + 1, rng);
    const Rational spq = (d[0] * d[1]) % 2 ? Rational(-1) : Rational(1);
    CHECK(bracket_3la(P, Q) == Rational(-1) * spq * bracket_3la(Q, P));
    const Cochain lhs = bracket_3la(P, bracket_3la(Q, R));
    const Cochain rhs = bracket_3la(bracket_3la(P, Q), R) + spq * bracket_3la(Q, bracket_3la(P, R));
    CHECK(lhs == rhs);
  }
  const Cochain big = oracle::random_cochain(n, n, 4, rng);
  CHECK_THROWS_AS(bracket_3la(big, big), InputError);
  CHECK_THROWS_AS(bracket_3la(oracle::random_cochain(2, 2, 1, rng), oracle::random_cochain(3, 3, 1, rng)), InputError);
}

TEST_CASE("lazy nodes agree with dense evaluation") {
  std::mt19937 rng(5);
  const Cochain P = oracle::random_cochain(3, 3, 2, rng), Q = oracle::random_cochain(3, 3, 2, rng);
  CHECK(materialize(*bracket_node(leaf(P), leaf(Q))) == bracket_3la(P, Q));
  CHECK(materialize(*circ_node(leaf(P), leaf(Q))) == circ(P, Q));
}

TEST_CASE("hemisemidirect structure squares to zero") {
  for (const auto& ctx : {l3_context(), l3_trivial_context()}) {
    const DerivedBrackets db(ctx);
    CHECK(bracket_3la(db.delta(), db.delta()).is_zero());
    CHECK(db.project(db.delta()).is_zero());
  }
}

TEST_CASE("brackets with an included map match the hand expansion") {
  std::mt19937 rng(99);
  for (const auto& ctx : {l3_context(), l3_trivial_context()}) {
    const DerivedBrackets db(ctx);
    std::vector<Matrix> maps = {t_star(), Matrix::identity(3), oracle::random_matrix(3, 3, rng)};
    for (const Matrix& T : maps) {
      const NodePtr t_hat = leaf(db.include(db.from_map(T)));
      const NodePtr dt = bracket_node(db.delta_node(), t_hat);
      const Cochain c1 = materialize(*dt);
      const Cochain c2 = materialize(*bracket_node(dt, t_hat));
      const std::size_t N = db.dim_e();
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          for (std::size_t k = 0; k < N; ++k) {
            CHECK(at3(c1, i, j, k) == oracle::delta_t_closed(*ctx, T, i, j, k));
            CHECK(at3(c2, i, j, k) == oracle::delta_tt_closed(*ctx, T, i, j, k));
          }
    }
  }
}

TEST_CASE("projection inverts inclusion") {
  std::mt19937 rng(3);
  const DerivedBrackets db(l3_context());
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    Cochain f = oracle::random_cochain(3, 3, arity, rng, Cochain::Space::F);
    CHECK(db.project(db.include(f)) == f);
  }
  CHECK_THROWS_AS(db.include(oracle::random_cochain(2, 3, 1, rng)), InputError);
  CHECK_THROWS_AS(db.project(oracle::random_cochain(3, 3, 1, rng)), InputError);
}

TEST_CASE("derived brackets on maps") {
  std::mt19937 rng(42);
  for (const auto& ctx : {l3_context(), l3_trivial_context()}) {
    const DerivedBrackets db(ctx);
    for (int round = 0; round < 3; ++round) {
      const Matrix T = round == 0 ? t_star() : oracle::random_matrix(3, 3, rng);
      const Cochain t = db.from_map(T);
      const Cochain l1 = db.l1(t);
      const Cochain l3 = db.l3(t, t, t);
      const Cochain mc = db.mc_residual(T);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t k = 0; k < 3; ++k) {
            const Vector u = unit_vector(3, i), v = unit_vector(3, j), w = unit_vector(3, k);
            const Vector Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
            const Vector bracket_p = ctx->Lp()(u, v, w);
            CHECK(at3(l1, i, j, k) == Rational(-1) * T.apply(bracket_p));
            const Vector cubic = ctx->L()(Tu, Tv, Tw) - T.apply(ctx->d_apply(Tu, Tv, w));
            CHECK(at3(l3, i, j, k) == Rational(6) * cubic);
            CHECK(at3(mc, i, j, k) == cubic - T.apply(bracket_p));
          }
      CHECK(db.l2(t, t).is_zero());
      CHECK(db.l1(l1).is_zero());
    }
  }
  const DerivedBrackets db(l3_context());
  const Cochain id = db.from_map(Matrix::identity(3));
  CHECK(db.l4(id, id, id, id).is_zero());
  CHECK(db.mc_residual(t_star()).is_zero());
  CHECK(at3(db.mc_residual(Matrix::identity(3)), 0, 1, 0) == Vector{0, 0, -1});
}

TEST_CASE("Maurer-Cartan residual vanishes exactly on nets") {
  const auto ctx = l3_context();
  const DerivedBrackets db(ctx);
  const auto grid = oracle::l3_parameter_grid();
  std::size_t nets = 0;
  for (std::size_t g = 0; g < grid.size(); g += 53) {
    const bool net = net_check(*ctx, grid[g], CheckOptions{0}).pass();
    CHECK(db.mc_residual(grid[g]).is_zero() == net);
    nets += net;
  }
  CHECK(nets > 0);
}

TEST_CASE("twisted structure around T-star") {
  const auto ctx = l3_context();
  const DerivedBrackets db(ctx);
  CHECK_THROWS_AS(TwistedBrackets(db, Matrix::identity(3)), AxiomError);
  const TwistedBrackets tw(db, t_star());
  CHECK(tw.mc_residual(Matrix(3, 3)).is_zero());
  CHECK(tw.mc_residual(t_one()).is_zero());
  CHECK_FALSE(tw.mc_residual(Matrix::identity(3)).is_zero());
  CHECK(net_check(*ctx, t_star() + t_one()).pass());
  CHECK_FALSE(net_check(*ctx, t_star() + Matrix::identity(3)).pass());

  std::mt19937 rng(8);
  for (int round = 0; round < 6; ++round) {
    Matrix Tt = oracle::random_matrix(3, 3, rng);
    if (round % 2) {
      Tt = Matrix(3, 3);
      Tt(2, round % 3) = Rational(round, 2);
    }
    CHECK(tw.mc_residual(Tt).is_zero() == net_check(*ctx, t_star() + Tt).pass());
  }

  const Cochain id = db.from_map(Matrix::identity(3));
  const Cochain d_id = tw.dT(id);
  CHECK(at3(d_id, 0, 1, 0) == Vector{0, 0, Rational(3, 2)});
  CHECK(tw.dT(d_id).is_zero());
  for (std::size_t arity = 1; arity <= 2; ++arity) {
    const Cochain f = oracle::random_cochain(3, 3, arity, rng, Cochain::Space::F);
    CHECK(tw.dT(tw.dT(f)).is_zero());
  }
  CHECK(tw.l2T(id, id) == db.l3(db.from_map(t_star()), id, id));
}
