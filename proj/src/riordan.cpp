#include "typeb/riordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "typeb/errors.hpp"

namespace typeb {

RiordanArray::RiordanArray(PowerSeries b, PowerSeries c, std::string name)
    : b_(std::move(b)), c_(std::move(c)), name_(std::move(name)) {
  if (b_.coefficient(0).is_zero())
    throw ConstantTermError("Riordan array '" + name_ + "': b(x) has zero constant term");
  if (c_.coefficient(0).is_zero())
    throw ConstantTermError("Riordan array '" + name_ + "': c(x) has zero constant term");
}

int RiordanArray::order() const { return std::min(b_.order(), c_.order() + 1); }

void RiordanArray::require(int n) const {
  if (n < 0) throw OutOfRange("Riordan row index must be nonnegative");
  if (n > order())
    throw InsufficientOrder("Riordan array '" + name_ + "' is known to order " +
                            std::to_string(order()) + ", row " + std::to_string(n) +
                            " requested");
}

Rational RiordanArray::entry(int n, int k) const {
  require(n);
  if (k < 0) throw OutOfRange("Riordan column index must be nonnegative");
  if (k > n) return {};
  const PowerSeries y = c_.shifted_up(1).truncated(n);
  // Square-and-multiply for (x c(x))^k.
  PowerSeries power = PowerSeries::constant(1, n);
  PowerSeries base = y;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) power = power * base;
    if (e > 1) base = base * base;
  }
  return (b_.truncated(n) * power).coefficient(n);
}

std::vector<std::vector<Rational>> RiordanArray::leading_block(int n_max) const {
  require(n_max);
  const PowerSeries y = c_.shifted_up(1).truncated(n_max);
  std::vector<std::vector<Rational>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) rows[n].resize(n + 1);
  PowerSeries column = b_.truncated(n_max);
  for (int k = 0; k <= n_max; ++k) {
    for (int n = k; n <= n_max; ++n) rows[n][k] = column.coefficient(n);
    column = column * y;
  }
  return rows;
}

PowerSeries RiordanArray::summation_series(const PowerSeries& g, int order) const {
  require(order);
  if (g.order() < order)
    throw InsufficientOrder("g(x) is known to order " + std::to_string(g.order()) +
                            ", summation to order " + std::to_string(order) + " requested");
  const PowerSeries y = c_.shifted_up(1).truncated(order);
  return b_.truncated(order) * compose(g.truncated(order), y);
}

Rational RiordanArray::summation(const PowerSeries& g, int n) const {
  return summation_series(g, n).coefficient(n);
}

NamedArray parse_named_array(std::string_view tag) {
  for (NamedArray a : kAllNamedArrays)
    if (to_string(a) == tag) return a;
  throw UnknownTag("unknown Riordan array '" + std::string(tag) + "'");
}

std::string_view to_string(NamedArray a) {
  switch (a) {
    case NamedArray::stirling1_A: return "stirling1_A";
    case NamedArray::stirling2_A: return "stirling2_A";
    case NamedArray::stirling1_B: return "stirling1_B";
    case NamedArray::lah_A: return "lah_A";
    case NamedArray::lah_B: return "lah_B";
  }
  return "?";
}

Family matching_family(NamedArray a) {
  switch (a) {
    case NamedArray::stirling1_A: return Family::stirling1_signless_A;
    case NamedArray::stirling2_A: return Family::stirling2_A;
    case NamedArray::stirling1_B: return Family::stirling1_signless_B;
    case NamedArray::lah_A: return Family::lah_A;
    case NamedArray::lah_B: return Family::lah_B;
  }
  throw UnknownTag("unknown Riordan array");
}

namespace {

PowerSeries inverse_sqrt_one_minus_2x(int order) {
  const Rational coeffs[] = {Rational(1), Rational(-2)};
  return pow_rational(PowerSeries::polynomial(coeffs, order), Rational(-1, 2));
}

}  // namespace

RiordanArray named_array(NamedArray a, int order) {
  if (order < 0) throw OutOfRange("negative Riordan array order");
  const std::string name(to_string(a));
  const auto one = PowerSeries::constant(1, order);
  switch (a) {
    case NamedArray::stirling1_A:
      // (1/x) ln(1/(1-x)); shifted_down rejects a nonzero constant term.
      return {one, log1(PowerSeries::geometric(1, order + 1)).shifted_down(1), name};
    case NamedArray::stirling2_A:
      return {one,
              (PowerSeries::exponential(order + 1) - PowerSeries::constant(1, order + 1))
                  .shifted_down(1),
              name};
    case NamedArray::stirling1_B:
      return {inverse_sqrt_one_minus_2x(order),
              log1(inverse_sqrt_one_minus_2x(order + 1)).shifted_down(1), name};
    case NamedArray::lah_A:
      return {one, PowerSeries::geometric(1, order), name};
    case NamedArray::lah_B:
      return {PowerSeries::geometric(2, order), PowerSeries::geometric(2, order), name};
  }
  throw UnknownTag("unknown Riordan array");
}

PowerSeries cauchy_kernel(CauchyKind kind, int order) {
  std::vector<Rational> c(order + 1);
  BigInt fact = 1;
  for (int k = 0; k <= order; ++k) {
    fact *= k + 1;
    c[k] = Rational(BigInt(1), fact);
    if (kind == CauchyKind::first && k % 2 == 0) c[k] = -c[k];
  }
  return PowerSeries(std::move(c));
}

PowerSeries cauchy_egf_via_summation(CauchyKind kind, int order) {
  return named_array(NamedArray::stirling1_B, order).summation_series(cauchy_kernel(kind, order),
                                                                     order);
}

PowerSeries derive_cauchy_egf(CauchyKind kind, int order) {
  auto closed = cauchy_egf_closed_form(kind, CauchyType::B, order);
  const auto proof = cauchy_egf_via_summation(kind, order);
  if (closed != proof)
    throw std::logic_error("closed-form and Riordan-summation EGFs disagree");
  return closed;
}

}  // namespace typeb
