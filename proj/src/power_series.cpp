#include "typeb/power_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "typeb/errors.hpp"

namespace typeb {

std::optional<int> parse_series_order(const char* text) {
  if (text == nullptr || *text == '\0') return std::nullopt;
  long value = 0;
  for (const char* p = text; *p != '\0'; ++p) {
    if (*p < '0' || *p > '9') return std::nullopt;
    value = value * 10 + (*p - '0');
    if (value > 100000) return std::nullopt;
  }
  if (value == 0) return std::nullopt;
  return static_cast<int>(value);
}

int default_series_order() {
  static const int order = [] {
    return parse_series_order(std::getenv("TYPEB_SERIES_ORDER")).value_or(64);
  }();
  return order;
}

namespace {

void require_order(int order) {
  if (order < 0) throw IndexBeyondOrder("negative truncation order " + std::to_string(order));
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::zero(int order) {
  require_order(order);
  return PowerSeries(std::vector<Rational>(order + 1));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  auto s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int degree, int order) {
  auto s = zero(order);
  if (degree >= 0 && degree <= order) s.coeffs_[degree] = c;
  return s;
}

PowerSeries PowerSeries::polynomial(std::span<const Rational> coeffs, int order) {
  auto s = zero(order);
  const auto n = std::min<std::size_t>(coeffs.size(), order + 1);
  std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
  return s;
}

PowerSeries PowerSeries::geometric(const Rational& ratio, int order) {
  auto s = zero(order);
  Rational p = 1;
  for (int n = 0; n <= order; ++n, p *= ratio) s.coeffs_[n] = p;
  return s;
}

PowerSeries PowerSeries::exponential(int order) {
  auto s = zero(order);
  Rational term = 1;
  for (int n = 0; n <= order; ++n) {
    s.coeffs_[n] = term;
    term /= Rational(n + 1);
  }
  return s;
}

const Rational& PowerSeries::coefficient(int n) const {
  if (n < 0 || n > order())
    throw IndexBeyondOrder("coefficient x^" + std::to_string(n) +
                           " requested from a series of order " + std::to_string(order()));
  return coeffs_[n];
}

std::optional<int> PowerSeries::valuation() const {
  for (int n = 0; n <= order(); ++n)
    if (!coeffs_[n].is_zero()) return n;
  return std::nullopt;
}

PowerSeries PowerSeries::truncated(int order) const {
  require_order(order);
  if (order > this->order())
    throw IndexBeyondOrder("cannot extend a series of order " + std::to_string(this->order()) +
                           " to order " + std::to_string(order));
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::shifted_up(int v) const {
  std::vector<Rational> c(v, Rational{});
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shifted_down(int v) const {
  if (v > order())
    throw IndexBeyondOrder("cannot divide a series of order " + std::to_string(order()) +
                           " by x^" + std::to_string(v));
  for (int n = 0; n < v; ++n)
    if (!coeffs_[n].is_zero())
      throw ValuationError("series is not divisible by x^" + std::to_string(v));
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return zero(0);
  std::vector<Rational> c(order());
  for (int n = 1; n <= order(); ++n) c[n - 1] = coeffs_[n] * Rational(n);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::integral() const {
  std::vector<Rational> c(order() + 2);
  for (int n = 0; n <= order(); ++n) c[n + 1] = coeffs_[n] / Rational(n + 1);
  return PowerSeries(std::move(c));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return divide(a, b); }

PowerSeries scale(const PowerSeries& s, const Rational& c) { return s * c; }

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
  const auto vb = b.valuation();
  if (!vb) throw ZeroDivisor("division by a series that is zero to order " +
                             std::to_string(b.order()));
  const int v = *vb;
  if (a.order() < v)
    throw ValuationError("numerator of order " + std::to_string(a.order()) +
                         " is not known far enough to cancel x^" + std::to_string(v));
  const auto va = a.valuation();
  if (va && *va < v)
    throw ValuationError("numerator vanishes to order " + std::to_string(*va) +
                         " but divisor to order " + std::to_string(v));
  const int order = std::min(a.order(), b.order()) - v;
  const auto num = a.shifted_down(v);
  const auto den = b.shifted_down(v);
  const Rational& lead = den.coefficient(0);
  std::vector<Rational> q(order + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = num.coefficient(n);
    for (int k = 1; k <= n; ++k) {
      const Rational& dk = den.coefficient(k);
      if (!dk.is_zero()) acc -= dk * q[n - k];
    }
    q[n] = acc / lead;
  }
  return PowerSeries(std::move(q));
}

PowerSeries reciprocal(const PowerSeries& s) {
  if (s.coefficient(0).is_zero()) throw ZeroDivisor("reciprocal of a series without constant term");
  return divide(PowerSeries::constant(1, s.order()), s);
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (!inner.coefficient(0).is_zero())
    throw ConstantTermError("inner series of a composition must have zero constant term");
  const auto v = inner.valuation();
  int order = inner.order();
  if (v) order = std::min(order, *v * (outer.order() + 1) - 1);

  // Terms y^i with i*v > order vanish after truncation.
  int top = outer.order();
  if (v) top = std::min(top, order / *v);
  else top = 0;

  const auto y = inner.truncated(order);
  PowerSeries result = PowerSeries::constant(outer.coefficient(top), order);
  for (int i = top - 1; i >= 0; --i) {
    result = result * y;
    result = result + PowerSeries::constant(outer.coefficient(i), order);
  }
  return result;
}

PowerSeries log1(const PowerSeries& s) {
  if (s.coefficient(0) != Rational(1))
    throw ConstantTermError("log1 requires constant term 1, got " + s.coefficient(0).str());
  if (s.order() == 0) return PowerSeries::zero(0);
  // log s = integral of s'/s.
  return divide(s.derivative(), s.truncated(s.order() - 1)).integral();
}

PowerSeries exp0(const PowerSeries& s) {
  if (!s.coefficient(0).is_zero())
    throw ConstantTermError("exp0 requires constant term 0, got " + s.coefficient(0).str());
  // E' = s' E  gives  n E_n = sum_{k=1}^{n} k s_k E_{n-k}.
  const int order = s.order();
  std::vector<Rational> e(order + 1);
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) {
      const Rational& sk = s.coefficient(k);
      if (!sk.is_zero()) acc += Rational(k) * sk * e[n - k];
    }
    e[n] = acc / Rational(n);
  }
  return PowerSeries(std::move(e));
}

PowerSeries pow_rational(const PowerSeries& s, const Rational& e) {
  return exp0(log1(s) * e);
}

std::vector<Rational> egf_sequence(const PowerSeries& s) {
  std::vector<Rational> out;
  out.reserve(s.order() + 1);
  BigInt fact = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) fact *= n;
    out.push_back(s.coefficient(n) * Rational(fact));
  }
  return out;
}

}  // namespace typeb
