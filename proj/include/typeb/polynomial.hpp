#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "typeb/rational.hpp"

namespace typeb {

/// Dense univariate polynomial over the rationals, monomial basis,
/// coefficient index = degree. Trailing zeros are trimmed so the leading
/// coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational{}} {}
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  static Polynomial monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  /// Coefficient of x^k; zero for k > degree().
  Rational coefficient(int k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& at) const;
  /// p(x + shift).
  Polynomial shifted(const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// (x-1)(x-3)...(x-2n+1); empty product for n = 0.
Polynomial falling_B(int n);
/// (x+1)(x+3)...(x+2n-1).
Polynomial rising_B(int n);
/// x(x-1)...(x-n+1).
Polynomial falling_A(int n);
/// x(x+1)...(x+n-1).
Polynomial rising_A(int n);

/// Exact value of the integral of p over [0, 1].
Rational integrate01(const Polynomial& p);

enum class Basis { monomial, falling_B, rising_B, falling_A, rising_A };

Basis parse_basis(std::string_view tag);
std::string_view to_string(Basis b);

/// k-th polynomial of the basis (monic, degree k).
Polynomial basis_polynomial(Basis b, int k);

/// Coordinates of p in the basis: result[k] multiplies basis_polynomial(b, k).
/// Length degree(p) + 1.
std::vector<Rational> to_basis(const Polynomial& p, Basis b);

/// sum_k coeffs[k] * basis_polynomial(b, k), expanded in the monomial basis.
Polynomial from_basis(std::span<const Rational> coeffs, Basis b);

}  // namespace typeb
