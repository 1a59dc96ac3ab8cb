#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include "typeb/cauchy.hpp"
#include "typeb/cli.hpp"
#include "typeb/errors.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/riordan.hpp"
#include "typeb/triangles.hpp"

namespace typeb::cli {

namespace {

using Result = std::optional<Failure>;

Failure value_failure(int n, int k, const Rational& expected, const Rational& actual,
                      std::string detail = {}) {
  return Failure{n, k, expected.str(), actual.str(), std::move(detail)};
}

Failure bool_failure(int n, std::string detail = {}) {
  return Failure{n, -1, "holds", "fails", std::move(detail)};
}

Result check_each(int n_max, bool (*check)(int)) {
  for (int n = 0; n <= n_max; ++n)
    if (!check(n)) return bool_failure(n);
  return std::nullopt;
}

Result cauchy_routes(CauchyKind kind, CauchyType type, int n_max) {
  const auto reference = cauchy_sequence(kind, type, n_max, CauchyRoute::integral);
  for (CauchyRoute route : kAllCauchyRoutes) {
    if (route == CauchyRoute::integral) continue;
    if (type == CauchyType::A && route == CauchyRoute::recurrence) continue;
    const auto other = cauchy_sequence(kind, type, n_max, route);
    for (int n = 0; n <= n_max; ++n)
      if (other.values[n] != reference.values[n])
        return value_failure(n, -1, reference.values[n], other.values[n],
                             "route " + std::string(to_string(route)) + " vs integral");
  }
  return std::nullopt;
}

// n! [x^n] of the closed form against sign(n) * integral-route value.
Result egf_against_integral(CauchyKind kind, CauchyType type, int n_max, int (*sign)(int)) {
  const auto closed = egf_sequence(cauchy_egf_closed_form(kind, type, n_max));
  const auto values = cauchy_sequence(kind, type, n_max, CauchyRoute::integral).values;
  for (int n = 0; n <= n_max; ++n) {
    const Rational expected = values[n] * Rational(sign(n));
    if (closed[n] != expected) return value_failure(n, -1, expected, closed[n]);
  }
  return std::nullopt;
}

int plus_one(int) { return 1; }
int alternating_from_minus_one(int n) { return sign_power(n - 1); }
int alternating(int n) { return sign_power(n); }

Result egf_riordan_route(int n_max) {
  for (CauchyKind kind : {CauchyKind::first, CauchyKind::second}) {
    const auto closed = cauchy_egf_closed_form(kind, CauchyType::B, n_max);
    const auto proof = cauchy_egf_via_summation(kind, n_max);
    for (int n = 0; n <= n_max; ++n)
      if (closed[n] != proof[n])
        return value_failure(n, -1, closed[n], proof[n],
                             std::string(to_string(kind)) + " kind, summation vs closed form");
  }
  return std::nullopt;
}

Result inverse_pair(Family a, Family b, int n_max) {
  if (const auto m = first_inverse_mismatch(triangle(a), triangle(b), n_max))
    return Failure{m->n, m->k, m->expected.get_str(), m->actual.get_str(),
                   std::string(to_string(a)) + " * " + std::string(to_string(b))};
  return std::nullopt;
}

Result lah_routes(int n_max) {
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      const BigInt ref = lah_B(n, k, LahRoute::closed_form);
      for (LahRoute r : kAllLahRoutes) {
        const BigInt v = lah_B(n, k, r);
        if (v != ref)
          return Failure{n, k, ref.get_str(), v.get_str(),
                         "route " + std::string(to_string(r)) + " vs closed_form"};
      }
    }
  return std::nullopt;
}

Result triangle_closed_forms(int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto rising = rising_B(n);
    for (int k = 0; k <= n; ++k) {
      if (stirling2_B(n, k) != stirling2_B_explicit(n, k))
        return Failure{n, k, stirling2_B_explicit(n, k).get_str(), stirling2_B(n, k).get_str(),
                       "S_B recurrence vs explicit sum"};
      const Rational c = rising.coefficient(k);
      if (c != Rational(stirling1_signless_B(n, k)))
        return Failure{n, k, c.str(), stirling1_signless_B(n, k).get_str(),
                       "c_B recurrence vs rising factorial coefficients"};
      if (lah_B(n, k, LahRoute::recurrence) != lah_B(n, k, LahRoute::closed_form))
        return Failure{n, k, lah_B(n, k, LahRoute::closed_form).get_str(),
                       lah_B(n, k, LahRoute::recurrence).get_str(),
                       "L_B recurrence vs closed form"};
      if (triangle(Family::lah_A).at(n, k) != lah_A(n, k))
        return Failure{n, k, lah_A(n, k).get_str(), triangle(Family::lah_A).at(n, k).get_str(),
                       "L recurrence vs closed form"};
    }
  }
  return std::nullopt;
}

Result riordan_normalization(int n_max) {
  for (NamedArray a : kAllNamedArrays) {
    const auto block = named_array(a, n_max).leading_block(n_max);
    const Triangle& t = triangle(matching_family(a));
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k) {
        const Rational expected = Rational(factorial(k) * t.at(n, k), factorial(n));
        if (block[n][k] != expected)
          return value_failure(n, k, expected, block[n][k], std::string(to_string(a)));
      }
  }
  return std::nullopt;
}

Result riordan_summation_property(int n_max) {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> g(n_max + 1);
  for (auto& v : g) v = Rational(BigInt(dist(rng)), BigInt(1 + static_cast<int>(rng() % 9)));
  const PowerSeries gs(g);
  for (NamedArray a : kAllNamedArrays) {
    const auto arr = named_array(a, n_max);
    const auto block = arr.leading_block(n_max);
    const auto series = arr.summation_series(gs, n_max);
    for (int n = 0; n <= n_max; ++n) {
      Rational direct;
      for (int k = 0; k <= n; ++k) direct += block[n][k] * g[k];
      if (direct != series[n]) return value_failure(n, -1, direct, series[n], std::string(to_string(a)));
    }
  }
  return std::nullopt;
}

PowerSeries one_minus(const Rational& a, int order) {
  const Rational c[] = {Rational(1), -a};
  return PowerSeries::polynomial(c, order);
}

Result lah_B_column_egf(int n_max) {
  const int k_max = std::min(10, n_max);
  for (int k = 0; k <= k_max; ++k) {
    const auto column = PowerSeries::monomial(Rational(BigInt(1), factorial(k)), k, n_max) *
                        pow_rational(one_minus(2, n_max), Rational(-(k + 1)));
    for (int n = 0; n <= n_max; ++n) {
      const Rational expected =
          n >= k ? Rational(lah_B(n, k), factorial(n)) : Rational(0);
      if (column[n] != expected) return value_failure(n, k, expected, column[n]);
    }
  }
  return std::nullopt;
}

Result lah_bell_egf(int n_max) {
  const auto x = PowerSeries::monomial(1, 1, n_max);
  const auto type_b = pow_rational(one_minus(2, n_max), -1) *
                      exp0(x * pow_rational(one_minus(2, n_max), -1));
  const auto type_a = exp0(x * pow_rational(one_minus(1, n_max), -1));
  for (int n = 0; n <= n_max; ++n) {
    const Rational b(lah_bell_B(n), factorial(n));
    if (type_b[n] != b) return value_failure(n, -1, b, type_b[n], "type B");
    const Rational a(lah_bell_A(n), factorial(n));
    if (type_a[n] != a) return value_failure(n, -1, a, type_a[n], "type A");
  }
  return std::nullopt;
}

Result classical_lah_egf(int n_max) {
  const int k_max = std::min(8, n_max);
  const auto base = PowerSeries::geometric(1, n_max).shifted_up(1).truncated(n_max);
  auto power = PowerSeries::constant(1, n_max);
  for (int k = 0; k <= k_max; ++k, power = power * base) {
    const auto column = power * Rational(BigInt(1), factorial(k));
    for (int n = 0; n <= n_max; ++n) {
      const Rational expected = n >= k ? Rational(lah_A(n, k), factorial(n)) : Rational(0);
      if (column[n] != expected) return value_failure(n, k, expected, column[n]);
    }
  }
  return std::nullopt;
}

Result coordinates_equal(int n, Basis basis, const std::vector<Rational>& got,
                         const std::vector<Rational>& want, std::string what) {
  for (std::size_t k = 0; k < want.size(); ++k) {
    const Rational g = k < got.size() ? got[k] : Rational(0);
    if (g != want[k])
      return value_failure(n, static_cast<int>(k), want[k], g,
                           what + " in basis " + std::string(to_string(basis)));
  }
  return std::nullopt;
}

Result basis_identities(int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto xn = Polynomial::monomial(n);
    std::vector<Rational> sb(n + 1), sb_alt(n + 1), cb(n + 1), sgnb(n + 1), lb(n + 1),
        lb_alt(n + 1);
    for (int k = 0; k <= n; ++k) {
      sb[k] = Rational(stirling2_B(n, k));
      sb_alt[k] = Rational(sign_power(n - k)) * sb[k];
      cb[k] = Rational(stirling1_signless_B(n, k));
      sgnb[k] = Rational(stirling1_signed_B(n, k));
      lb[k] = Rational(lah_B(n, k));
      lb_alt[k] = Rational(sign_power(n - k)) * lb[k];
    }
    // x^n in the falling and rising type-B bases.
    if (auto f = coordinates_equal(n, Basis::falling_B, to_basis(xn, Basis::falling_B), sb, "x^n"))
      return f;
    if (auto f = coordinates_equal(n, Basis::rising_B, to_basis(xn, Basis::rising_B), sb_alt, "x^n"))
      return f;
    // Monomial expansions of the factorials.
    if (auto f = coordinates_equal(n, Basis::monomial, to_basis(falling_B(n), Basis::monomial),
                                   sgnb, "falling_B(n)"))
      return f;
    if (auto f = coordinates_equal(n, Basis::monomial, to_basis(rising_B(n), Basis::monomial), cb,
                                   "rising_B(n)"))
      return f;
    // Change of basis between the two factorials.
    if (auto f = coordinates_equal(n, Basis::falling_B, to_basis(rising_B(n), Basis::falling_B),
                                   lb, "rising_B(n)"))
      return f;
    if (auto f = coordinates_equal(n, Basis::rising_B, to_basis(falling_B(n), Basis::rising_B),
                                   lb_alt, "falling_B(n)"))
      return f;
    if (rising_B(n) != falling_B(n).shifted(2 * n))
      return bool_failure(n, "rising_B(n)(x) == falling_B(n)(x + 2n)");
    for (Basis b : {Basis::monomial, Basis::falling_B, Basis::rising_B, Basis::falling_A,
                    Basis::rising_A}) {
      for (const auto& p : {xn, falling_B(n), rising_B(n)})
        if (from_basis(to_basis(p, b), b) != p)
          return bool_failure(n, "round trip through basis " + std::string(to_string(b)));
    }
  }
  return std::nullopt;
}

Result factorial_values(int n_max) {
  BigInt double_factorial = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) double_factorial *= 2 * n;
    const Rational r = rising_B(n).evaluate(1);
    if (r != Rational(double_factorial))
      return value_failure(n, -1, Rational(double_factorial), r, "rising_B(n)(1) == (2n)!!");
    BigInt row = 0;
    for (const auto& v : triangle(Family::stirling1_signless_B).row(n)) row += v;
    if (row != double_factorial)
      return Failure{n, -1, double_factorial.get_str(), row.get_str(), "sum_k c_B(n,k)"};
    Rational at_one;
    for (int k = 0; k <= n; ++k) at_one += Rational(stirling2_B(n, k)) * falling_B(k).evaluate(1);
    if (at_one != Rational(1))
      return value_failure(n, -1, 1, at_one, "sum_k S_B(n,k) falling_B(k)(1)");
  }
  return std::nullopt;
}

std::vector<Identity> build_registry() {
  return {
      {"harmonic_identity", "sum_k S_B(n,k) C_k^B = 1/(n+1) = sum_k S_B(n,k)(-1)^(n-k) c_k^B",
       [](int n) { return check_each(n, check_harmonic_identity); }},
      {"recurrence_first_B", "C_{n+1}^B + (2n+1) C_n^B = sum_k s_B(n,k)/(k+2)",
       [](int n) { return check_each(n, check_recurrence_first_B); }},
      {"recurrence_second_B", "c_{n+1}^B - (2n+1) c_n^B = sum_k c_B(n,k)/(k+2)",
       [](int n) { return check_each(n, check_recurrence_second_B); }},
      {"lah_inversion", "c_n^B = sum_k L_B(n,k) C_k^B and its inverse",
       [](int n) { return check_each(n, check_lah_inversion); }},
      {"cauchy_routes_first_B", "integral, Stirling sum, recurrence and EGF routes agree for C_n^B",
       [](int n) { return cauchy_routes(CauchyKind::first, CauchyType::B, n); }},
      {"cauchy_routes_second_B", "integral, Stirling sum, recurrence and EGF routes agree for c_n^B",
       [](int n) { return cauchy_routes(CauchyKind::second, CauchyType::B, n); }},
      {"cauchy_routes_A", "integral, Stirling sum and EGF routes agree for classical C_n and c_n",
       [](int n) {
         if (auto f = cauchy_routes(CauchyKind::first, CauchyType::A, n)) return f;
         return cauchy_routes(CauchyKind::second, CauchyType::A, n);
       }},
      {"egf_first_kind", "n![x^n] of the first-kind closed form = (-1)^(n-1) C_n^B",
       [](int n) {
         return egf_against_integral(CauchyKind::first, CauchyType::B, n,
                                     alternating_from_minus_one);
       }},
      {"egf_second_kind", "n![x^n] of the second-kind closed form = c_n^B",
       [](int n) { return egf_against_integral(CauchyKind::second, CauchyType::B, n, plus_one); }},
      {"egf_riordan_route", "Riordan summation route reproduces both closed-form EGFs",
       egf_riordan_route},
      {"egf_classical", "x/ln(1+x) generates C_n, x/((1+x)ln(1+x)) generates (-1)^n c_n",
       [](int n) {
         if (auto f = egf_against_integral(CauchyKind::first, CauchyType::A, n, plus_one))
           return f;
         return egf_against_integral(CauchyKind::second, CauchyType::A, n, alternating);
       }},
      {"inverse_stirling_B", "[s_B][S_B] = I",
       [](int n) { return inverse_pair(Family::stirling1_signed_B, Family::stirling2_B, n); }},
      {"inverse_lah_B", "[(-1)^(n-k) L_B][L_B] = I",
       [](int n) { return inverse_pair(Family::lah_B_signed, Family::lah_B, n); }},
      {"inverse_stirling_A", "[s][S] = I",
       [](int n) { return inverse_pair(Family::stirling1_signed_A, Family::stirling2_A, n); }},
      {"lah_B_routes", "closed form, recurrence, convolution and falling-factorial L_B agree",
       lah_routes},
      {"triangle_closed_forms", "S_B, c_B, L_B and L recurrences match their closed forms",
       triangle_closed_forms},
      {"riordan_normalization", "entry(R,n,k) = (k!/n!) T(n,k) for the five named arrays",
       riordan_normalization},
      {"riordan_summation_property", "sum_k b_{n,k} g_k = [x^n] b(x) g(x c(x))",
       riordan_summation_property},
      {"lah_B_column_egf", "x^k / ((1-2x)^(k+1) k!) generates L_B(n,k), k <= 10", lah_B_column_egf},
      {"lah_bell_egf", "e^(x/(1-2x))/(1-2x) and e^(x/(1-x)) generate LB(n) and L(n)",
       lah_bell_egf},
      {"classical_lah_egf", "(x/(1-x))^k / k! generates L(n,k), k <= 8", classical_lah_egf},
      {"basis_identities", "factorial basis conversions, including [x]_n^B in the (x)_k^B basis",
       basis_identities},
      {"factorial_values", "rising_B(n)(1) = (2n)!! = sum_k c_B(n,k); x^n at x=1", factorial_values},
  };
}

}  // namespace

const std::vector<Identity>& identity_registry() {
  static const std::vector<Identity> registry = build_registry();
  return registry;
}

std::vector<VerificationReport> cmd_verify(std::string_view identity, int n_max) {
  if (n_max < 0) throw OutOfRange("n_max must be nonnegative, got " + std::to_string(n_max));
  std::vector<const Identity*> selected;
  for (const auto& id : identity_registry())
    if (identity == "all" || id.tag == identity) selected.push_back(&id);
  if (selected.empty()) throw UnknownTag("unknown identity '" + std::string(identity) + "'");

  std::vector<std::future<Result>> pending;
  for (const Identity* id : selected)
    pending.push_back(std::async(std::launch::async, id->check, n_max));

  std::vector<VerificationReport> reports;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    auto failure = pending[i].get();
    reports.push_back({selected[i]->tag, n_max, !failure.has_value(), std::move(failure)});
  }
  return reports;
}

std::string render(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.identity << " (n <= " << r.n_max << ")";
  if (r.failure) {
    const auto& f = *r.failure;
    os << ": first failure at n=" << f.n;
    if (f.k >= 0) os << ", k=" << f.k;
    os << ", expected " << f.expected << ", got " << f.actual;
    if (!f.detail.empty()) os << " [" << f.detail << "]";
  }
  return os.str();
}

}  // namespace typeb::cli
