#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "typeb/errors.hpp"
#include "typeb/triangles.hpp"

using namespace typeb;

TEST_CASE("type-B Stirling numbers of the second kind") {
  CHECK(stirling2_B(4, 2) == 58);
  CHECK(stirling2_B(7, 1) == 1093);
  CHECK(stirling2_B(5, 5) == 1);
  for (int n = 0; n <= 25; ++n) {
    CHECK(stirling2_B(n, 0) == 1);
    for (int k = 0; k <= n; ++k) CHECK(stirling2_B(n, k) == oracle::stirling2_B(n, k));
  }
}

TEST_CASE("type-B Stirling numbers of the first kind") {
  CHECK(stirling1_signless_B(4, 1) == 176);
  CHECK(stirling1_signless_B(6, 3) == 3480);
  CHECK(stirling1_signed_B(2, 1) == -4);
  CHECK(stirling1_signless_B(0, 0) == 1);
  CHECK(stirling1_signless_B(1, 0) == 1);
  for (int n = 0; n <= 20; ++n) {
    const auto coeffs = oracle::rising_B(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling1_signless_B(n, k) == coeffs[k]);
      CHECK(stirling1_signed_B(n, k) == sign_power(n - k) * stirling1_signless_B(n, k));
    }
  }
}

TEST_CASE("classical Stirling numbers against brute force") {
  CHECK(oracle::set_partitions(4, 2) == 7);
  CHECK(oracle::permutations_with_cycles(4, 2) == 11);
  CHECK(stirling2_A(4, 2) == 7);
  CHECK(stirling1_signless_A(4, 2) == 11);
  for (int n = 0; n <= 7; ++n) {
    CHECK(stirling2_A(n, n) == 1);
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling2_A(n, k) == oracle::set_partitions(n, k));
      CHECK(stirling1_signless_A(n, k) == oracle::permutations_with_cycles(n, k));
    }
  }
}

TEST_CASE("classical Lah numbers") {
  CHECK(lah_A(3, 2) == 6);
  CHECK(lah_A(3, 1) == 6);
  CHECK(lah_A(0, 0) == 1);
  CHECK(lah_A(4, 0) == 0);
  for (int n = 0; n <= 20; ++n) {
    CHECK(lah_A(n, n) == 1);
    for (int k = 0; k <= n; ++k) CHECK(triangle(Family::lah_A).at(n, k) == lah_A(n, k));
  }
}

TEST_CASE("type-B Lah numbers by every route") {
  CHECK(lah_B(4, 1) == 768);
  CHECK(lah_B(3, 2) == 18);
  CHECK(lah_B(5, 0) == 3840);
  for (int n = 0; n <= 30; ++n) {
    CHECK(lah_B(n, 0) == pow2(n) * factorial(n));
    for (int k = 0; k <= n; ++k) {
      const BigInt ref = lah_B(n, k, LahRoute::closed_form);
      for (LahRoute r : kAllLahRoutes) CHECK(lah_B(n, k, r) == ref);
    }
  }
}

TEST_CASE("Lah-Bell numbers") {
  CHECK(lah_bell_B(4) == 1473);
  CHECK(lah_bell_B(7) == 5129307);
  CHECK(lah_bell_B(0) == 1);
  // Classical: 1, 1, 3, 13, 73, 501.
  const long classical[] = {1, 1, 3, 13, 73, 501};
  for (int n = 0; n <= 5; ++n) CHECK(lah_bell_A(n) == classical[n]);
}

TEST_CASE("inverse pairs") {
  CHECK(verify_inverse_pair(triangle(Family::stirling1_signed_B), triangle(Family::stirling2_B), 30));
  CHECK(verify_inverse_pair(triangle(Family::lah_B_signed), triangle(Family::lah_B), 30));
  CHECK(verify_inverse_pair(triangle(Family::stirling1_signed_A), triangle(Family::stirling2_A), 20));
  CHECK_FALSE(verify_inverse_pair(triangle(Family::stirling2_B), triangle(Family::stirling2_B), 5));
  const auto m = first_inverse_mismatch(triangle(Family::stirling2_B), triangle(Family::stirling2_B), 5);
  REQUIRE(m.has_value());
  CHECK(m->n == 1);
  CHECK(m->k == 0);
  CHECK(m->actual == 2);
}

TEST_CASE("sign pattern of the signed families") {
  for (int n = 0; n <= 15; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling2_B(n, k) >= 0);
      CHECK(lah_B(n, k) >= 0);
      CHECK(sgn(triangle(Family::lah_B_signed).at(n, k)) == sign_power(n - k));
      CHECK(sgn(stirling1_signed_B(n, k)) == sign_power(n - k));
    }
}

TEST_CASE("out-of-range access") {
  CHECK_THROWS_AS(stirling2_B(3, 4), OutOfRange);
  CHECK_THROWS_AS(stirling2_B(3, -1), OutOfRange);
  CHECK_THROWS_AS(lah_B(-1, 0, LahRoute::closed_form), OutOfRange);
  CHECK_THROWS_AS(lah_bell_B(-2), OutOfRange);
  CHECK_THROWS_AS(parse_family("stirling3_B"), UnknownTag);
  CHECK_THROWS_AS(parse_lah_route("magic"), UnknownTag);
  CHECK(parse_family("lah_B_signed") == Family::lah_B_signed);
}

TEST_CASE("concurrent readers see the same rows") {
  const Triangle t(Family::stirling2_B);
  std::vector<std::vector<BigInt>> seen(4);
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] {
      for (int n = 0; n <= 60; ++n) seen[i] = t.row(60 - (n % 3));
      seen[i] = t.row(60);
    });
  for (auto& w : workers) w.join();
  for (int i = 1; i < 4; ++i) CHECK(seen[i] == seen[0]);
  for (int k = 0; k <= 60; k += 7) CHECK(seen[0][k] == stirling2_B_explicit(60, k));
}
