#include "exact/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "exact/errors.hpp"

namespace netlts {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

bool Rational::is_canonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_class n = abs(value_.get_num());
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), value_.get_den_mpz_t());
  return g == 1 || (n == 0 && value_.get_den() == 1);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

void add_product(Rational& acc, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(acc.value_.get_mpq_t(), acc.value_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void add_scaled(Vector& acc, const Rational& c, const Vector& v) {
  if (acc.size() != v.size()) throw InputError("vector size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) add_product(acc[i], c, v[i]);
}

Vector operator+(Vector a, const Vector& b) {
  add_scaled(a, 1, b);
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  add_scaled(a, -1, b);
  return a;
}

Vector operator*(const Rational& c, Vector v) {
  for (auto& x : v) x *= c;
  return v;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace netlts
