#include "typeb/cauchy.hpp"

#include "typeb/errors.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/triangles.hpp"

namespace typeb {

CauchyRoute parse_cauchy_route(std::string_view tag) {
  if (tag == "integral") return CauchyRoute::integral;
  if (tag == "stirling_sum") return CauchyRoute::stirling_sum;
  if (tag == "recurrence") return CauchyRoute::recurrence;
  if (tag == "egf") return CauchyRoute::egf;
  throw UnknownTag("unknown Cauchy route '" + std::string(tag) + "'");
}

std::string_view to_string(CauchyRoute r) {
  switch (r) {
    case CauchyRoute::integral: return "integral";
    case CauchyRoute::stirling_sum: return "stirling_sum";
    case CauchyRoute::recurrence: return "recurrence";
    case CauchyRoute::egf: return "egf";
  }
  return "?";
}

std::string_view to_string(CauchyKind k) { return k == CauchyKind::first ? "first" : "second"; }
std::string_view to_string(CauchyType t) { return t == CauchyType::A ? "A" : "B"; }

namespace {

void check_n(int n) {
  if (n < 0) throw OutOfRange("Cauchy number index must be nonnegative, got " + std::to_string(n));
}

Polynomial factorial_polynomial(CauchyKind kind, CauchyType type, int n) {
  if (type == CauchyType::B) return kind == CauchyKind::first ? falling_B(n) : rising_B(n);
  return kind == CauchyKind::first ? falling_A(n) : rising_A(n);
}

// Row n of the Stirling triangle whose entries are the monomial coefficients
// of the factorial polynomial.
Family coefficient_family(CauchyKind kind, CauchyType type) {
  if (type == CauchyType::B)
    return kind == CauchyKind::first ? Family::stirling1_signed_B : Family::stirling1_signless_B;
  return kind == CauchyKind::first ? Family::stirling1_signed_A : Family::stirling1_signless_A;
}

Rational stirling_sum(CauchyKind kind, CauchyType type, int n, int shift) {
  const auto row = triangle(coefficient_family(kind, type)).row(n);
  Rational acc;
  for (int k = 0; k <= n; ++k) acc += Rational(row[k], BigInt(k + shift));
  return acc;
}

// Sign relating n! [x^n] of the closed-form EGF to the Cauchy number.
int egf_sign(CauchyKind kind, CauchyType type, int n) {
  if (type == CauchyType::B) return kind == CauchyKind::first ? sign_power(n - 1) : 1;
  return kind == CauchyKind::first ? 1 : sign_power(n);
}

std::vector<Rational> recurrence_values(CauchyKind kind, int n_max) {
  std::vector<Rational> v{Rational(1)};
  for (int m = 0; m < n_max; ++m) {
    const Rational rhs = stirling_sum(kind, CauchyType::B, m, 2);
    const Rational step = Rational(2 * m + 1) * v[m];
    v.push_back(kind == CauchyKind::first ? rhs - step : rhs + step);
  }
  return v;
}

Rational single(CauchyKind kind, CauchyType type, int n, CauchyRoute route) {
  check_n(n);
  switch (route) {
    case CauchyRoute::integral:
      return integrate01(factorial_polynomial(kind, type, n));
    case CauchyRoute::stirling_sum:
      return stirling_sum(kind, type, n, 1);
    case CauchyRoute::recurrence:
      if (type == CauchyType::A)
        throw UnknownTag("the recurrence route exists for type B Cauchy numbers only");
      return recurrence_values(kind, n).back();
    case CauchyRoute::egf: {
      const auto s = cauchy_egf_closed_form(kind, type, n);
      return s.coefficient(n) * Rational(factorial(n)) * Rational(egf_sign(kind, type, n));
    }
  }
  throw UnknownTag("unknown Cauchy route");
}

}  // namespace

CauchySequence cauchy_sequence(CauchyKind kind, CauchyType type, int n_max, CauchyRoute route) {
  check_n(n_max);
  CauchySequence seq{kind, type, route, {}};
  switch (route) {
    case CauchyRoute::recurrence:
      if (type == CauchyType::A)
        throw UnknownTag("the recurrence route exists for type B Cauchy numbers only");
      seq.values = recurrence_values(kind, n_max);
      break;
    case CauchyRoute::egf: {
      auto values = egf_sequence(cauchy_egf_closed_form(kind, type, n_max));
      for (int n = 0; n <= n_max; ++n) values[n] *= Rational(egf_sign(kind, type, n));
      seq.values = std::move(values);
      break;
    }
    default:
      for (int n = 0; n <= n_max; ++n) seq.values.push_back(single(kind, type, n, route));
  }
  return seq;
}

Rational cauchy_first_B(int n, CauchyRoute route) {
  return single(CauchyKind::first, CauchyType::B, n, route);
}
Rational cauchy_second_B(int n, CauchyRoute route) {
  return single(CauchyKind::second, CauchyType::B, n, route);
}
Rational cauchy_first_A(int n, CauchyRoute route) {
  return single(CauchyKind::first, CauchyType::A, n, route);
}
Rational cauchy_second_A(int n, CauchyRoute route) {
  return single(CauchyKind::second, CauchyType::A, n, route);
}

PowerSeries cauchy_egf_closed_form(CauchyKind kind, CauchyType type, int order) {
  check_n(order);
  // Numerator and denominator both vanish to first order at 0; build them one
  // order higher so the quotient is known to `order`.
  const int work = order + 1;
  const PowerSeries one = PowerSeries::constant(1, work);
  if (type == CauchyType::B) {
    const Rational coeffs[] = {Rational(1), Rational(-2)};
    const auto one_minus_2x = PowerSeries::polynomial(coeffs, work);
    const auto root = pow_rational(one_minus_2x, Rational(1, 2));
    // ln sqrt(1-2x) = -ln(1/sqrt(1-2x)), kept inside the rationals.
    const auto log_root = -log1(pow_rational(one_minus_2x, Rational(-1, 2)));
    const auto numerator = one - root;
    if (kind == CauchyKind::second) {
      const Rational two_x_minus_1[] = {Rational(-1), Rational(2)};
      return divide(numerator, PowerSeries::polynomial(two_x_minus_1, work) * log_root);
    }
    return divide(numerator, root * log_root);
  }
  const Rational one_plus_x_coeffs[] = {Rational(1), Rational(1)};
  const auto one_plus_x = PowerSeries::polynomial(one_plus_x_coeffs, work);
  const auto x = PowerSeries::monomial(1, 1, work);
  const auto log_term = log1(one_plus_x);
  if (kind == CauchyKind::first) return divide(x, log_term);
  return divide(x, one_plus_x * log_term);
}

bool check_recurrence_first_B(int n) {
  check_n(n);
  const Rational lhs = cauchy_first_B(n + 1) + Rational(2 * n + 1) * cauchy_first_B(n);
  return lhs == stirling_sum(CauchyKind::first, CauchyType::B, n, 2);
}

bool check_recurrence_second_B(int n) {
  check_n(n);
  const Rational lhs = cauchy_second_B(n + 1) - Rational(2 * n + 1) * cauchy_second_B(n);
  return lhs == stirling_sum(CauchyKind::second, CauchyType::B, n, 2);
}

bool check_harmonic_identity(int n) {
  check_n(n);
  const auto s = triangle(Family::stirling2_B).row(n);
  Rational first, second;
  for (int k = 0; k <= n; ++k) {
    first += Rational(s[k]) * cauchy_first_B(k);
    second += Rational(s[k]) * Rational(sign_power(n - k)) * cauchy_second_B(k);
  }
  const Rational target(BigInt(1), BigInt(n + 1));
  return first == target && second == target;
}

bool check_lah_inversion(int n) {
  check_n(n);
  const auto lah = triangle(Family::lah_B).row(n);
  Rational second, first;
  for (int k = 0; k <= n; ++k) {
    second += Rational(lah[k]) * cauchy_first_B(k);
    first += Rational(sign_power(n - k)) * Rational(lah[k]) * cauchy_second_B(k);
  }
  return second == cauchy_second_B(n) && first == cauchy_first_B(n);
}

}  // namespace typeb
