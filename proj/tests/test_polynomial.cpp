#include <doctest.h>

#include "oracles.hpp"
#include "typeb/errors.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/triangles.hpp"

using namespace typeb;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

constexpr Basis kBases[] = {Basis::monomial, Basis::falling_B, Basis::rising_B, Basis::falling_A,
                            Basis::rising_A};

}  // namespace

TEST_CASE("type-B factorials") {
  CHECK(falling_B(0) == Polynomial{1});
  CHECK(falling_B(2) == Polynomial({3, -4, 1}));
  CHECK(falling_B(3) == Polynomial({-15, 23, -9, 1}));
  CHECK(rising_B(0) == Polynomial{1});
  CHECK(rising_B(2) == Polynomial({3, 4, 1}));
  CHECK(rising_B(4) == Polynomial({105, 176, 86, 16, 1}));
  for (int n = 0; n <= 12; ++n) {
    CHECK(falling_B(n).degree() == n);
    const auto f = oracle::falling_B(n);
    const auto r = oracle::rising_B(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(falling_B(n).coefficient(k) == Rational(f[k]));
      CHECK(rising_B(n).coefficient(k) == Rational(r[k]));
    }
  }
}

TEST_CASE("classical factorials") {
  CHECK(falling_A(2) == Polynomial({0, -1, 1}));
  CHECK(rising_A(2) == Polynomial({0, 1, 1}));
  CHECK(falling_A(0) == Polynomial{1});
}

TEST_CASE("integrate01") {
  CHECK(integrate01(falling_B(2)) == Rational(BigInt(4), BigInt(3)));
  CHECK(integrate01(rising_B(3)) == Rational(BigInt(119), BigInt(4)));
  CHECK(integrate01(Polynomial{1}) == 1);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p(oracle::random_coeffs(rng, 7));
    const Polynomial r(oracle::random_coeffs(rng, 5));
    const Rational a = oracle::small_rational(rng);
    CHECK(integrate01(a * p + r) == a * integrate01(p) + integrate01(r));
  }
}

TEST_CASE("basis conversion examples") {
  CHECK(to_basis(Polynomial::monomial(3), Basis::falling_B) == ints({1, 13, 9, 1}));
  CHECK(to_basis(rising_B(2), Basis::falling_B) == ints({8, 8, 1}));
  CHECK(to_basis(Polynomial::monomial(2), Basis::monomial) == ints({0, 0, 1}));

  CHECK(from_basis(ints({0, 0, 0, 1}), Basis::falling_B) == falling_B(3));
  CHECK(from_basis(ints({3, -4, 1}), Basis::monomial) == falling_B(2));
  // Signed Lah row 2 over the rising basis gives the falling factorial.
  CHECK(from_basis(ints({8, -8, 1}), Basis::rising_B) == falling_B(2));
}

TEST_CASE("basis round trips on random polynomials") {
  std::mt19937 rng(17);
  for (Basis b : kBases) {
    for (int trial = 0; trial < 6; ++trial) {
      const Polynomial p(oracle::random_coeffs(rng, 3 + trial * 4));
      const auto coords = to_basis(p, b);
      CHECK(coords.size() == static_cast<std::size_t>(p.degree() + 1));
      CHECK(from_basis(coords, b) == p);
    }
  }
  CHECK(to_basis(Polynomial{}, Basis::falling_B) == ints({0}));
}

TEST_CASE("type-B Stirling numbers are the basis change coefficients") {
  for (int n = 0; n <= 20; ++n) {
    const auto down = to_basis(Polynomial::monomial(n), Basis::falling_B);
    const auto up = to_basis(Polynomial::monomial(n), Basis::rising_B);
    for (int k = 0; k <= n; ++k) {
      CHECK(down[k] == Rational(oracle::stirling2_B(n, k)));
      CHECK(up[k] == Rational(sign_power(n - k)) * Rational(oracle::stirling2_B(n, k)));
    }
  }
}

TEST_CASE("rising factorial is a shifted falling factorial") {
  for (int n = 0; n <= 15; ++n) CHECK(rising_B(n) == falling_B(n).shifted(2 * n));
}

TEST_CASE("evaluation and printing") {
  CHECK(falling_B(3).evaluate(7) == Rational(6 * 4 * 2));
  CHECK(falling_B(2).str() == "x^2 - 4*x + 3");
  CHECK(Polynomial{}.str() == "0");
  CHECK(parse_basis("rising_A") == Basis::rising_A);
  CHECK_THROWS_AS(parse_basis("chebyshev"), UnknownTag);
}
