#include <doctest.h>

#include "oracles.hpp"
#include "typeb/errors.hpp"
#include "typeb/riordan.hpp"

using namespace typeb;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("entry examples") {
  const auto lb = named_array(NamedArray::lah_B);
  CHECK(lb.entry(2, 1) == 4);
  CHECK(lb.entry(2, 1) == Rational(lah_B(2, 1)) / 2);
  CHECK(named_array(NamedArray::stirling1_B).entry(3, 1) == q(23, 6));
  CHECK(named_array(NamedArray::stirling2_A).entry(4, 2) == q(7, 12));
  CHECK(named_array(NamedArray::lah_A).entry(3, 2) == 2);
  CHECK(lb.entry(3, 5) == 0);
  for (NamedArray a : kAllNamedArrays) {
    const auto r = named_array(a);
    CHECK(r.entry(0, 0) == r.b()[0]);
  }
  const auto cb = named_array(NamedArray::stirling1_B);
  BigInt double_fact = 1;
  for (int n = 0; n <= 15; ++n) {
    if (n > 0) double_fact *= 2 * n - 1;
    CHECK(cb.entry(n, 0) == Rational(double_fact, factorial(n)));
  }
}

TEST_CASE("normalization against the triangles") {
  for (NamedArray a : kAllNamedArrays) {
    const auto r = named_array(a);
    const auto& t = triangle(matching_family(a));
    const auto block = r.leading_block(25);
    for (int n = 0; n <= 25; ++n)
      for (int k = 0; k <= n; ++k) {
        const Rational expected = Rational(factorial(k) * t.at(n, k), factorial(n));
        CHECK(r.entry(n, k) == expected);
        CHECK(block[n][k] == expected);
      }
  }
}

TEST_CASE("summation property") {
  std::mt19937 rng(23);
  for (NamedArray a : kAllNamedArrays) {
    const auto r = named_array(a, 25);
    const PowerSeries g(oracle::random_coeffs(rng, 25));
    for (int n = 0; n <= 25; ++n) {
      Rational direct;
      for (int k = 0; k <= n; ++k) direct += r.entry(n, k) * g[k];
      CHECK(r.summation(g, n) == direct);
    }
    const auto one = PowerSeries::constant(1, 25);
    for (int n = 0; n <= 25; ++n) CHECK(r.summation(one, n) == r.b()[n]);
  }
}

TEST_CASE("summation examples from the EGF proofs") {
  const auto cb = named_array(NamedArray::stirling1_B, 10);
  CHECK(cb.summation(cauchy_kernel(CauchyKind::second, 10), 1) == q(3, 2));
  CHECK(cb.summation(cauchy_kernel(CauchyKind::first, 10), 2) == q(-2, 3));
}

TEST_CASE("derived Cauchy EGFs") {
  const auto second = derive_cauchy_egf(CauchyKind::second, 30);
  CHECK(second[0] == 1);
  CHECK(second[3] == q(119, 24));
  const auto first = derive_cauchy_egf(CauchyKind::first, 30);
  CHECK(first[0] == -1);
  CHECK(cauchy_egf_via_summation(CauchyKind::first, 30) == first);
  CHECK(cauchy_egf_via_summation(CauchyKind::second, 30) == second);
}

TEST_CASE("Lah column and Lah-Bell generating functions") {
  const auto lb = named_array(NamedArray::lah_B, 25);
  for (int k = 0; k <= 10; ++k) {
    // x^k / ((1-2x)^(k+1) k!) by the binomial oracle.
    const auto tail = oracle::binomial_series(Rational(-(k + 1)), -2, 25);
    for (int n = k; n <= 25; ++n) {
      const Rational coeff = tail[n - k] / Rational(factorial(k));
      CHECK(coeff == Rational(lah_B(n, k), factorial(n)));
      CHECK(lb.entry(n, k) / Rational(factorial(k)) == coeff);
    }
  }
  const auto bell = lb.summation_series(PowerSeries::exponential(25), 25);
  const auto bell_a = named_array(NamedArray::lah_A, 25).summation_series(PowerSeries::exponential(25), 25);
  for (int n = 0; n <= 25; ++n) {
    CHECK(bell[n] == Rational(lah_bell_B(n), factorial(n)));
    CHECK(bell_a[n] == Rational(lah_bell_A(n), factorial(n)));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(RiordanArray(PowerSeries::zero(5), PowerSeries::constant(1, 5)), ConstantTermError);
  CHECK_THROWS_AS(RiordanArray(PowerSeries::constant(1, 5), PowerSeries::monomial(1, 1, 5)),
                  ConstantTermError);
  const auto r = named_array(NamedArray::lah_A, 10);
  CHECK(r.order() == 10);
  CHECK_THROWS_AS((void)r.entry(11, 1), InsufficientOrder);
  CHECK_THROWS_AS((void)r.summation(PowerSeries::constant(1, 3), 5), InsufficientOrder);
  CHECK_THROWS_AS(parse_named_array("stirling3_B"), UnknownTag);
}
