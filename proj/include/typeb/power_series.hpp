#pragma once

#include <optional>
#include <span>
#include <vector>

#include "typeb/rational.hpp"

namespace typeb {

/// Truncation order used when none is given. Reads TYPEB_SERIES_ORDER from
/// the environment once; falls back to 64.
int default_series_order();

/// Parses a truncation order override. Returns nullopt unless the text is a
/// positive decimal integer no larger than 100000.
std::optional<int> parse_series_order(const char* text);

/// Truncated formal power series over the rationals.
///
/// Holds coefficients of x^0 .. x^order. Coefficients above the order are
/// unknown, not zero, and every operation tracks how far its result is
/// actually determined: binary operations keep the smaller operand order,
/// division loses the cancelled valuation, composition is limited by the
/// inner series' valuation.
class PowerSeries {
 public:
  /// Zero series of order 0.
  PowerSeries() : coeffs_(1) {}

  /// Series with the given coefficients; order = coeffs.size() - 1.
  /// An empty vector is treated as the zero series of order 0.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(int order);
  static PowerSeries constant(const Rational& c, int order);
  /// c * x^degree truncated to `order` (zero when degree > order).
  static PowerSeries monomial(const Rational& c, int degree, int order);
  /// Finite sum sum_i coeffs[i] x^i, known exactly to `order`.
  static PowerSeries polynomial(std::span<const Rational> coeffs, int order);
  /// 1/(1 - ratio*x).
  static PowerSeries geometric(const Rational& ratio, int order);
  /// e^x.
  static PowerSeries exponential(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^n. Throws IndexBeyondOrder when n > order().
  const Rational& coefficient(int n) const;
  const Rational& operator[](int n) const { return coefficient(n); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, nullopt when every known
  /// coefficient is zero.
  std::optional<int> valuation() const;

  /// Same series with fewer known coefficients. `order` must not exceed order().
  PowerSeries truncated(int order) const;
  /// Multiplies by x^v; the result is known to order() + v.
  PowerSeries shifted_up(int v) const;
  /// Divides by x^v. The first v coefficients must be zero.
  PowerSeries shifted_down(int v) const;

  /// Formal derivative (order drops by one; a series of order 0 gives the
  /// zero series of order 0).
  PowerSeries derivative() const;
  /// Antiderivative with zero constant term (order grows by one).
  PowerSeries integral() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  PowerSeries operator-() const;

  /// Cauchy product truncated to the smaller operand order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  /// See divide().
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Scales by a rational (termwise).
PowerSeries scale(const PowerSeries& s, const Rational& c);

/// Quotient a/b. When b vanishes at 0 to order v, x^v is cancelled from both
/// operands first, so the result is known to min(a.order, b.order) - v.
/// Throws ZeroDivisor when b is zero to its order and ValuationError when a
/// vanishes to lower order than b.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

/// Multiplicative inverse; the constant term must be nonzero.
PowerSeries reciprocal(const PowerSeries& s);

/// outer(inner(x)). inner must have zero constant term (ConstantTermError
/// otherwise). The result is known to min(inner.order, v*(outer.order+1) - 1)
/// where v is the valuation of inner.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Logarithm of a series with constant term 1; result has constant term 0.
PowerSeries log1(const PowerSeries& s);

/// Exponential of a series with constant term 0.
PowerSeries exp0(const PowerSeries& s);

/// s^e for rational e, s with constant term 1: exp0(e * log1(s)).
PowerSeries pow_rational(const PowerSeries& s, const Rational& e);

/// n! * [x^n] s for n = 0..s.order.
std::vector<Rational> egf_sequence(const PowerSeries& s);

}  // namespace typeb
