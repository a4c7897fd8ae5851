#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace netlts {

/// Exact rational number backed by GMP. Every value is kept in lowest terms
/// with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "p" or "p/q" (optional leading sign on p). Throws InputError on
  /// malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const;
  /// gcd(|num|, den) == 1 and den > 0.
  bool is_canonical() const;

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// acc += a * b without temporaries.
  friend void add_product(Rational& acc, const Rational& a, const Rational& b);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
/// acc += c * v (sizes must match).
void add_scaled(Vector& acc, const Rational& c, const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Rational& c, Vector v);
std::string to_string(const Vector& v);

}  // namespace netlts
