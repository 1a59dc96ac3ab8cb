#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace typeb {

/// Arbitrary-precision integer. All triangle entries use this type.
using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned e);

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// num/den in lowest terms. Throws ZeroDivisor when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" for integers, "p/q" otherwise; never whitespace, q > 0.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (-1)^e as an int.
constexpr int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace typeb
