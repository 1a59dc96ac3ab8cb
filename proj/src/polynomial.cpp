#include "typeb/polynomial.hpp"

#include <algorithm>

#include "typeb/errors.hpp"

namespace typeb {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::x() { return monomial(1); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[k];
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  // Horner in the polynomial ring: p(x+s) = (...(c_d (x+s) + c_{d-1})(x+s) + ...).
  const Polynomial step({shift, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * step + constant(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const bool unit = mag == Rational(1);
    if (!unit || k == 0) out += mag.str();
    if (k >= 1) out += (unit ? "x" : "*x");
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

// prod_{i=0}^{n-1} (x + offset + step*i)
Polynomial linear_product(int n, long offset, long step) {
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) p = p * Polynomial({offset + step * i, 1});
  return p;
}

}  // namespace

Polynomial falling_B(int n) { return linear_product(n, -1, -2); }
Polynomial rising_B(int n) { return linear_product(n, 1, 2); }
Polynomial falling_A(int n) { return linear_product(n, 0, -1); }
Polynomial rising_A(int n) { return linear_product(n, 0, 1); }

Rational integrate01(const Polynomial& p) {
  Rational acc;
  for (int k = 0; k <= p.degree(); ++k) acc += p.coefficient(k) / Rational(k + 1);
  return acc;
}

Basis parse_basis(std::string_view tag) {
  if (tag == "monomial") return Basis::monomial;
  if (tag == "falling_B") return Basis::falling_B;
  if (tag == "rising_B") return Basis::rising_B;
  if (tag == "falling_A") return Basis::falling_A;
  if (tag == "rising_A") return Basis::rising_A;
  throw UnknownTag("unknown basis '" + std::string(tag) + "'");
}

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::falling_B: return "falling_B";
    case Basis::rising_B: return "rising_B";
    case Basis::falling_A: return "falling_A";
    case Basis::rising_A: return "rising_A";
  }
  return "?";
}

Polynomial basis_polynomial(Basis b, int k) {
  switch (b) {
    case Basis::monomial: return Polynomial::monomial(k);
    case Basis::falling_B: return falling_B(k);
    case Basis::rising_B: return rising_B(k);
    case Basis::falling_A: return falling_A(k);
    case Basis::rising_A: return rising_A(k);
  }
  throw UnknownTag("unknown basis");
}

std::vector<Rational> to_basis(const Polynomial& p, Basis b) {
  // Every basis polynomial is monic of its index degree, so peeling off the
  // leading term from the top down is an exact triangular solve.
  const int d = p.degree();
  std::vector<Polynomial> basis;
  basis.reserve(d + 1);
  for (int k = 0; k <= d; ++k) basis.push_back(basis_polynomial(b, k));

  std::vector<Rational> out(d + 1);
  Polynomial rest = p;
  for (int k = d; k >= 0; --k) {
    const Rational c = rest.coefficient(k);
    out[k] = c;
    if (!c.is_zero()) rest -= basis[k] * c;
  }
  return out;
}

Polynomial from_basis(std::span<const Rational> coeffs, Basis b) {
  Polynomial acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) acc += basis_polynomial(b, static_cast<int>(k)) * coeffs[k];
  return acc;
}

}  // namespace typeb
