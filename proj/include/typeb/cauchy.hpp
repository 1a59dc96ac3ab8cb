#pragma once

#include <string_view>
#include <vector>

#include "typeb/power_series.hpp"
#include "typeb/rational.hpp"

namespace typeb {

enum class CauchyKind { first, second };
enum class CauchyType { A, B };

/// How a Cauchy number was produced.
///  integral      exact integral over [0,1] of the expanded factorial polynomial
///  stirling_sum  sum_k T(n,k)/(k+1) over the matching Stirling row
///  recurrence    the first-order recurrence in n (type B only)
///  egf           n! [x^n] of the closed-form exponential generating function
enum class CauchyRoute { integral, stirling_sum, recurrence, egf };

CauchyRoute parse_cauchy_route(std::string_view tag);
std::string_view to_string(CauchyRoute r);
std::string_view to_string(CauchyKind k);
std::string_view to_string(CauchyType t);

inline constexpr CauchyRoute kAllCauchyRoutes[] = {CauchyRoute::integral,
                                                   CauchyRoute::stirling_sum,
                                                   CauchyRoute::recurrence, CauchyRoute::egf};

/// Values C_0..C_{n_max} (or c_0..) of one family, tagged with the route.
struct CauchySequence {
  CauchyKind kind;
  CauchyType type;
  CauchyRoute route;
  std::vector<Rational> values;
};

/// Throws UnknownTag for the recurrence route with type A, which has none.
CauchySequence cauchy_sequence(CauchyKind kind, CauchyType type, int n_max, CauchyRoute route);

/// C_n^B, the integral over [0,1] of (x-1)(x-3)...(x-2n+1).
Rational cauchy_first_B(int n, CauchyRoute route = CauchyRoute::integral);
/// c_n^B, the integral over [0,1] of (x+1)(x+3)...(x+2n-1).
Rational cauchy_second_B(int n, CauchyRoute route = CauchyRoute::integral);
/// C_n, the integral of x(x-1)...(x-n+1).
Rational cauchy_first_A(int n, CauchyRoute route = CauchyRoute::integral);
/// c_n, the integral of x(x+1)...(x+n-1). The closed-form EGF
/// x/((1+x)ln(1+x)) generates (-1)^n c_n; the egf route undoes that sign.
Rational cauchy_second_A(int n, CauchyRoute route = CauchyRoute::integral);

/// Closed-form exponential generating functions, known to `order`:
///  B, second  (1 - sqrt(1-2x)) / ((2x-1) ln sqrt(1-2x))        -> c_n^B
///  B, first   (1 - sqrt(1-2x)) / (sqrt(1-2x) ln sqrt(1-2x))    -> (-1)^(n-1) C_n^B
///  A, first   x / ln(1+x)                                       -> C_n
///  A, second  x / ((1+x) ln(1+x))                               -> (-1)^n c_n
/// The removable singularities at 0 are cancelled exactly.
PowerSeries cauchy_egf_closed_form(CauchyKind kind, CauchyType type, int order);

/// C_{n+1}^B + (2n+1) C_n^B == sum_k s_B(n,k)/(k+2)
bool check_recurrence_first_B(int n);
/// c_{n+1}^B - (2n+1) c_n^B == sum_k c_B(n,k)/(k+2)
bool check_recurrence_second_B(int n);
/// sum_k S_B(n,k) C_k^B == 1/(n+1) == sum_k S_B(n,k) (-1)^(n-k) c_k^B
bool check_harmonic_identity(int n);
/// c_n^B == sum_k L_B(n,k) C_k^B and C_n^B == sum_k (-1)^(n-k) L_B(n,k) c_k^B
bool check_lah_inversion(int n);

}  // namespace typeb
