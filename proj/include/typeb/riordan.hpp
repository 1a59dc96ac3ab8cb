#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typeb/cauchy.hpp"
#include "typeb/power_series.hpp"
#include "typeb/triangles.hpp"

namespace typeb {

inline constexpr int kDefaultArrayOrder = 40;

/// Riordan array given by the pair (b(x), c(x)), with entries
/// b_{n,k} = [x^n] b(x) (x c(x))^k.
class RiordanArray {
 public:
  /// Throws ConstantTermError when b or c has a zero constant term.
  RiordanArray(PowerSeries b, PowerSeries c, std::string name = {});

  const PowerSeries& b() const { return b_; }
  const PowerSeries& c() const { return c_; }
  const std::string& name() const { return name_; }

  /// Largest n for which entries are determined.
  int order() const;

  /// b_{n,k}; zero for k > n. Throws InsufficientOrder when n > order().
  Rational entry(int n, int k) const;

  /// Rows 0..n_max of the array, computed column by column.
  std::vector<std::vector<Rational>> leading_block(int n_max) const;

  /// [x^n] b(x) g(x c(x)), which equals sum_k b_{n,k} g_k.
  /// Throws InsufficientOrder when g or the array is known to less than n.
  Rational summation(const PowerSeries& g, int n) const;

  /// b(x) g(x c(x)) as a series known to `order`.
  PowerSeries summation_series(const PowerSeries& g, int order) const;

 private:
  void require(int n) const;

  PowerSeries b_;
  PowerSeries c_;
  std::string name_;
};

enum class NamedArray { stirling1_A, stirling2_A, stirling1_B, lah_A, lah_B };

inline constexpr NamedArray kAllNamedArrays[] = {NamedArray::stirling1_A, NamedArray::stirling2_A,
                                                 NamedArray::stirling1_B, NamedArray::lah_A,
                                                 NamedArray::lah_B};

NamedArray parse_named_array(std::string_view tag);
std::string_view to_string(NamedArray a);

/// Triangle T with entry(named_array(a), n, k) = (k!/n!) T(n,k).
Family matching_family(NamedArray a);

///  stirling1_A  (1, (1/x) ln(1/(1-x)))
///  stirling2_A  (1, (e^x - 1)/x)
///  stirling1_B  (1/sqrt(1-2x), (1/x) ln(1/sqrt(1-2x)))
///  lah_A        (1, 1/(1-x))
///  lah_B        (1/(1-2x), 1/(1-2x))
RiordanArray named_array(NamedArray a, int order = kDefaultArrayOrder);

/// The sequence transform applied to the Cauchy numbers before summing
/// against the stirling1_B array: g_k = 1/(k+1)! for the second kind and
/// (-1)^(k+1)/(k+1)! for the first, i.e. (e^y - 1)/y and (e^-y - 1)/y.
PowerSeries cauchy_kernel(CauchyKind kind, int order);

/// Cauchy type-B EGF obtained by the summation property over the stirling1_B
/// array, known to `order`.
PowerSeries cauchy_egf_via_summation(CauchyKind kind, int order);

/// Builds the closed-form EGF of the type-B Cauchy numbers and the same series
/// by the Riordan summation route; throws std::logic_error if they differ.
/// Returns the closed form.
PowerSeries derive_cauchy_egf(CauchyKind kind, int order = kDefaultArrayOrder);

}  // namespace typeb
