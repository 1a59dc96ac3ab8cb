#include <doctest.h>

#include "oracles.hpp"
#include "typeb/cauchy.hpp"
#include "typeb/errors.hpp"

using namespace typeb;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

const Rational kFirstB[] = {q(1),      q(-1, 2),   q(4, 3),      q(-25, 4),
                            q(628, 15), q(-729, 2), q(81994, 21), q(-1191619, 24)};
const Rational kSecondB[] = {q(1),        q(3, 2),     q(16, 3),      q(119, 4),
                             q(3388, 15), q(13013, 6), q(528790, 21), q(2742975, 8)};

}  // namespace

TEST_CASE("type-B Cauchy numbers match the printed tables") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(cauchy_first_B(n) == kFirstB[n]);
    CHECK(cauchy_second_B(n) == kSecondB[n]);
    // Independent integral of the oracle expansion.
    CHECK(oracle::integrate01(oracle::falling_B(n)) == kFirstB[n]);
    CHECK(oracle::integrate01(oracle::rising_B(n)) == kSecondB[n]);
  }
}

TEST_CASE("route examples") {
  CHECK(cauchy_first_B(3, CauchyRoute::integral) == q(-25, 4));
  CHECK(cauchy_first_B(6, CauchyRoute::stirling_sum) == q(81994, 21));
  for (CauchyRoute r : kAllCauchyRoutes) {
    CHECK(cauchy_first_B(0, r) == 1);
    CHECK(cauchy_second_B(0, r) == 1);
  }
  CHECK(cauchy_second_B(5, CauchyRoute::integral) == q(13013, 6));
  CHECK(cauchy_second_B(2, CauchyRoute::stirling_sum) == q(3) + q(4, 2) + q(1, 3));
  CHECK(cauchy_second_B(7, CauchyRoute::egf) == q(2742975, 8));
}

TEST_CASE("all routes agree up to 40") {
  for (auto kind : {CauchyKind::first, CauchyKind::second}) {
    const auto ref = cauchy_sequence(kind, CauchyType::B, 40, CauchyRoute::integral);
    CHECK(ref.route == CauchyRoute::integral);
    for (CauchyRoute r : kAllCauchyRoutes) {
      const auto other = cauchy_sequence(kind, CauchyType::B, 40, r);
      CHECK(other.route == r);
      CHECK(other.values == ref.values);
    }
    const auto ref_a = cauchy_sequence(kind, CauchyType::A, 25, CauchyRoute::integral);
    for (CauchyRoute r : {CauchyRoute::stirling_sum, CauchyRoute::egf})
      CHECK(cauchy_sequence(kind, CauchyType::A, 25, r).values == ref_a.values);
  }
  CHECK_THROWS_AS(cauchy_sequence(CauchyKind::first, CauchyType::A, 5, CauchyRoute::recurrence),
                  UnknownTag);
}

TEST_CASE("classical Cauchy numbers") {
  CHECK(cauchy_first_A(2) == q(-1, 6));
  CHECK(cauchy_second_A(2) == q(5, 6));
  CHECK(cauchy_first_A(0) == 1);
  CHECK(cauchy_first_A(1) == q(1, 2));
  for (int n = 0; n <= 10; ++n) {
    std::vector<long> falling, rising;
    for (int i = 0; i < n; ++i) {
      falling.push_back(-i);
      rising.push_back(i);
    }
    CHECK(cauchy_first_A(n) == oracle::integrate01(oracle::expand_linear_product(falling)));
    CHECK(cauchy_second_A(n) == oracle::integrate01(oracle::expand_linear_product(rising)));
  }
}

TEST_CASE("recurrence checks") {
  // -25/4 + 5 * 4/3 = 5/12 = 3/2 - 4/3 + 1/4
  CHECK(kFirstB[3] + 5 * kFirstB[2] == q(5, 12));
  CHECK(q(3, 2) - q(4, 3) + q(1, 4) == q(5, 12));
  CHECK(kSecondB[2] - 3 * kSecondB[1] == q(1, 2) + q(1, 3));
  for (int n = 0; n <= 40; ++n) {
    CHECK(check_recurrence_first_B(n));
    CHECK(check_recurrence_second_B(n));
  }
}

TEST_CASE("harmonic identity and Lah inversion") {
  CHECK(q(1) + q(-1, 2) == q(1, 2));
  CHECK(q(1) + 4 * q(-1, 2) + q(4, 3) == q(1, 3));
  CHECK(8 * q(1) + 8 * q(-1, 2) + q(4, 3) == q(16, 3));
  for (int n = 0; n <= 40; ++n) CHECK(check_harmonic_identity(n));
  for (int n = 0; n <= 30; ++n) CHECK(check_lah_inversion(n));
}

TEST_CASE("closed-form EGFs") {
  const int order = 30;
  const auto second = cauchy_egf_closed_form(CauchyKind::second, CauchyType::B, order);
  const auto first = cauchy_egf_closed_form(CauchyKind::first, CauchyType::B, order);
  CHECK(second.order() == order);
  CHECK(first.order() == order);
  CHECK(first[0] == -1);
  CHECK(second[3] == q(119, 24));
  for (int n = 0; n <= order; ++n) {
    CHECK(second[n] * Rational(factorial(n)) == cauchy_second_B(n));
    CHECK(first[n] * Rational(factorial(n)) == Rational(sign_power(n - 1)) * cauchy_first_B(n));
  }
  const auto a1 = cauchy_egf_closed_form(CauchyKind::first, CauchyType::A, 20);
  const auto a2 = cauchy_egf_closed_form(CauchyKind::second, CauchyType::A, 20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(a1[n] * Rational(factorial(n)) == cauchy_first_A(n));
    CHECK(a2[n] * Rational(factorial(n)) == Rational(sign_power(n)) * cauchy_second_A(n));
  }
}

TEST_CASE("negative indices") {
  CHECK_THROWS_AS(cauchy_first_B(-1), OutOfRange);
  CHECK_THROWS_AS(cauchy_sequence(CauchyKind::second, CauchyType::B, -1, CauchyRoute::integral),
                  OutOfRange);
  CHECK_THROWS_AS(parse_cauchy_route("quadrature"), UnknownTag);
}
