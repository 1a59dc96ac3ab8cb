#include "typeb/rational.hpp"

#include <ostream>

#include "typeb/errors.hpp"

namespace typeb {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDivisor("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error("empty integer in rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error("malformed rational '" + std::string(text) + "'");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw Error("malformed rational '" + std::string(text) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDivisor("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace typeb
