#include "algebra/algebras.hpp"

namespace netlts {

namespace {

// [e_i, e_j, v] for a coordinate vector v.
Vector right_apply(const TriBracket& b, std::size_t i, std::size_t j, const Vector& v) {
  Vector out(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k)
    if (!v[k].is_zero()) add_scaled(out, v[k], b.at(i, j, k));
  return out;
}

Vector middle_apply(const TriBracket& b, std::size_t i, const Vector& v, std::size_t k) {
  Vector out(b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j)
    if (!v[j].is_zero()) add_scaled(out, v[j], b.at(i, j, k));
  return out;
}

Vector left_apply(const TriBracket& b, const Vector& v, std::size_t j, std::size_t k) {
  Vector out(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!v[i].is_zero()) add_scaled(out, v[i], b.at(i, j, k));
  return out;
}

Verdict fundamental_identity(const TriBracket& b, std::string identity, const CheckOptions& options) {
  IdentityTally tally(std::move(identity), options);
  const std::size_t n = b.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            Vector lhs = right_apply(b, a, c, b.at(x, y, z));
            Vector rhs = left_apply(b, b.at(a, c, x), y, z);
            rhs = rhs + middle_apply(b, x, b.at(a, c, y), z);
            rhs = rhs + right_apply(b, x, y, b.at(a, c, z));
            tally.compare({a, c, x, y, z}, lhs, rhs);
          }
  return std::move(tally).finish();
}

std::vector<std::string> checked_labels(std::vector<std::string> labels, std::size_t dim) {
  if (labels.empty()) return default_labels(dim);
  if (labels.size() != dim) throw InputError("basis label count does not match dimension");
  return labels;
}

}  // namespace

Report verify_lts(const TriBracket& b, const CheckOptions& options) {
  const std::size_t n = b.dim();
  Report report;

  IdentityTally skew("lts.skew", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) skew.expect_zero({i, j, k}, b.at(i, j, k) + b.at(j, i, k));
  report.append(std::move(skew).finish());

  IdentityTally cyclic("lts.cyclic", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        cyclic.expect_zero({i, j, k}, b.at(i, j, k) + b.at(k, i, j) + b.at(j, k, i));
  report.append(std::move(cyclic).finish());

  report.append(fundamental_identity(b, "lts.fundamental", options));
  return report;
}

Report verify_3leibniz(const TriBracket& b, const CheckOptions& options) {
  Report report;
  report.append(fundamental_identity(b, "3leibniz.fundamental", options));
  return report;
}

Report verify_lie(const BiBracket& b, const CheckOptions& options) {
  const std::size_t n = b.dim();
  Report report;

  IdentityTally anti("lie.antisymmetry", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) anti.expect_zero({i, j}, b.at(i, j) + b.at(j, i));
  report.append(std::move(anti).finish());

  IdentityTally jacobi("lie.jacobi", options);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector sum = b.apply(b.at(i, j), ek);
        sum = sum + b.apply(b.at(j, k), ei);
        sum = sum + b.apply(b.at(k, i), ej);
        jacobi.expect_zero({i, j, k}, sum);
      }
  report.append(std::move(jacobi).finish());
  return report;
}

std::vector<std::string> default_labels(std::size_t dim, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

LieTripleSystem LieTripleSystem::make(TriBracket b, std::vector<std::string> labels) {
  labels = checked_labels(std::move(labels), b.dim());
  Report r = verify_lts(b);
  if (!r.pass()) throw AxiomError("bracket is not a Lie triple system (" + r.first_failure()->identity + ")", r);
  return LieTripleSystem(std::move(b), std::move(labels));
}

ThreeLeibnizAlgebra ThreeLeibnizAlgebra::make(TriBracket b, std::vector<std::string> labels) {
  labels = checked_labels(std::move(labels), b.dim());
  Report r = verify_3leibniz(b);
  if (!r.pass()) throw AxiomError("bracket is not a 3-Leibniz algebra", r);
  return ThreeLeibnizAlgebra(std::move(b), std::move(labels));
}

LieAlgebra LieAlgebra::make(BiBracket b, std::vector<std::string> labels) {
  labels = checked_labels(std::move(labels), b.dim());
  Report r = verify_lie(b);
  if (!r.pass()) throw AxiomError("bracket is not a Lie algebra (" + r.first_failure()->identity + ")", r);
  return LieAlgebra(std::move(b), std::move(labels));
}

std::vector<Vector> center(const TriBracket& b) {
  const std::size_t n = b.dim();
  // rows: coordinate l of [x, e_j, e_k] as a linear form in x
  Matrix stacked(n * n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        const Vector& v = b.at(i, j, k);
        for (std::size_t l = 0; l < n; ++l) stacked((j * n + k) * n + l, i) = v[l];
      }
  return nullspace(stacked);
}

std::vector<Vector> center(const LieTripleSystem& alg) { return center(alg.bracket()); }

std::vector<Vector> derived_subsystem(const TriBracket& b) {
  const std::size_t n = b.dim();
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(b.at(i, j, k))) products.push_back(b.at(i, j, k));
  return span_basis(products, n);
}

std::vector<Vector> derived_subsystem(const LieTripleSystem& alg) { return derived_subsystem(alg.bracket()); }

Verdict tri_homomorphism(const TriBracket& src, const TriBracket& dst, const Matrix& f, std::string identity,
                         const CheckOptions& options) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw InputError("homomorphism matrix has wrong shape");
  IdentityTally tally(std::move(identity), options);
  const std::size_t n = src.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        tally.compare({i, j, k}, f.apply(src.at(i, j, k)), dst.apply(images[i], images[j], images[k]));
  return std::move(tally).finish();
}

LieTripleSystem l3_system() {
  TriBracket b(3);
  b.set(0, 1, 0, 2, Rational(1));
  b.set(1, 0, 0, 2, Rational(-1));
  return LieTripleSystem::make(std::move(b), {"eps1", "eps2", "eps3"});
}

}  // namespace netlts
