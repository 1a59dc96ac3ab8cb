#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's series, polynomial or triangle code; only the Rational and
// BigInt value types are shared.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "typeb/rational.hpp"

namespace oracle {

using typeb::BigInt;
using typeb::Rational;

/// Number of partitions of an n-set into k blocks, by enumerating
/// restricted growth strings.
inline long set_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> a(n, 0);
  long count = 0;
  for (;;) {
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    if (blocks == k) ++count;
    // Next restricted growth string.
    int i = n - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
    }
    if (i == 0) return count;
  }
}

/// Number of permutations of n elements with exactly k cycles.
inline long permutations_with_cycles(int n, int k) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Coefficients of (1 + a x)^e to `order`, from the generalized binomial
/// theorem: C(e, n) a^n.
inline std::vector<Rational> binomial_series(const Rational& e, const Rational& a, int order) {
  std::vector<Rational> out(order + 1);
  Rational binom = 1;
  Rational power = 1;
  for (int n = 0; n <= order; ++n) {
    out[n] = binom * power;
    binom = binom * (e - Rational(n)) / Rational(n + 1);
    power *= a;
  }
  return out;
}

inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      int order) {
  std::vector<Rational> c(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// exp(s) as sum_k s^k / k!; s must have zero constant term.
inline std::vector<Rational> exp_by_powers(const std::vector<Rational>& s, int order) {
  std::vector<Rational> out(order + 1), power(order + 1);
  power[0] = 1;
  Rational inv_fact = 1;
  for (int k = 0; k <= order; ++k) {
    for (int n = 0; n <= order; ++n) out[n] += power[n] * inv_fact;
    power = convolve(power, s, order);
    inv_fact /= Rational(k + 1);
  }
  return out;
}

/// Monomial coefficients of prod_i (x + roots_offset[i]), as integers.
inline std::vector<BigInt> expand_linear_product(const std::vector<long>& offsets) {
  std::vector<BigInt> p{1};
  for (long c : offsets) {
    std::vector<BigInt> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * c;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

inline Rational integrate01(const std::vector<BigInt>& coeffs) {
  Rational acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += Rational(coeffs[k], BigInt(static_cast<long>(k + 1)));
  return acc;
}

/// (x-1)(x-3)...(x-2n+1) and (x+1)(x+3)...(x+2n-1).
inline std::vector<BigInt> falling_B(int n) {
  std::vector<long> off;
  for (int i = 1; i <= n; ++i) off.push_back(-(2L * i - 1));
  return expand_linear_product(off);
}
inline std::vector<BigInt> rising_B(int n) {
  std::vector<long> off;
  for (int i = 1; i <= n; ++i) off.push_back(2L * i - 1);
  return expand_linear_product(off);
}

/// S_B(n,k) from the explicit alternating sum.
inline BigInt stirling2_B(int n, int k) {
  BigInt acc = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = 1;
    for (int i = 0; i < n; ++i) term *= 2 * j + 1;
    term *= typeb::binomial(k, j);
    acc += ((k - j) % 2 == 0) ? term : BigInt(-term);
  }
  return acc / (typeb::pow2(k) * typeb::factorial(k));
}

/// Small random rational with |num| <= 9 and 1 <= den <= 6.
inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline std::vector<Rational> random_coeffs(std::mt19937& rng, int order) {
  std::vector<Rational> c(order + 1);
  for (auto& v : c) v = small_rational(rng);
  return c;
}

}  // namespace oracle
