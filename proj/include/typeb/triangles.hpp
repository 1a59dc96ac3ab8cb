#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typeb/rational.hpp"

namespace typeb {

/// Integer triangle families. Signed variants carry (-1)^(n-k).
enum class Family {
  stirling2_A,           // S(n,k)
  stirling1_signless_A,  // c(n,k)
  stirling1_signed_A,    // s(n,k)
  stirling2_B,           // S_B(n,k)
  stirling1_signless_B,  // c_B(n,k)
  stirling1_signed_B,    // s_B(n,k)
  lah_A,                 // L(n,k)
  lah_B,                 // L_B(n,k)
  lah_B_signed,          // (-1)^(n-k) L_B(n,k)
};

Family parse_family(std::string_view tag);
std::string_view to_string(Family f);

/// Lower-triangular integer table, generated row by row from the family's
/// recurrence and memoized. Rows are extended lazily under a mutex, so a
/// Triangle may be read from several threads at once.
class Triangle {
 public:
  explicit Triangle(Family family) : family_(family) {}
  Triangle(const Triangle&) = delete;
  Triangle& operator=(const Triangle&) = delete;

  Family family() const { return family_; }

  /// Entry (n, k). Throws OutOfRange unless 0 <= k <= n.
  BigInt at(int n, int k) const;
  /// Row n: entries (n,0)..(n,n).
  std::vector<BigInt> row(int n) const;

 private:
  void extend_to(int n) const;
  BigInt next_entry(int n, int k) const;

  Family family_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

/// Process-wide memoized triangle for a family.
const Triangle& triangle(Family family);

BigInt stirling2_B(int n, int k);
BigInt stirling1_signless_B(int n, int k);
BigInt stirling1_signed_B(int n, int k);
BigInt stirling2_A(int n, int k);
BigInt stirling1_signless_A(int n, int k);
BigInt stirling1_signed_A(int n, int k);

/// Explicit sum for S_B(n,k): (1/(2^k k!)) sum_j (-1)^(k-j) C(k,j) (2j+1)^n.
BigInt stirling2_B_explicit(int n, int k);

/// Classical Lah number from (n!/k!) C(n-1, k-1), with L(0,0) = 1.
BigInt lah_A(int n, int k);

enum class LahRoute { closed_form, recurrence, convolution, falling_factorial };

LahRoute parse_lah_route(std::string_view tag);
std::string_view to_string(LahRoute r);
inline constexpr LahRoute kAllLahRoutes[] = {LahRoute::closed_form, LahRoute::recurrence,
                                             LahRoute::convolution,
                                             LahRoute::falling_factorial};

/// Type-B Lah number by the chosen route:
///  closed_form        C(n,k)^2 2^(n-k) (n-k)!
///  recurrence         L_B(n-1,k-1) + 2(n+k) L_B(n-1,k), L_B(n,0) = 2^n n!
///  convolution        sum_j c_B(n,j) S_B(j,k)
///  falling_factorial  C(n,k) * (2n)(2n-2)...(2k+2), the type-B falling
///                     factorial of length n-k at 2n+1
BigInt lah_B(int n, int k, LahRoute route = LahRoute::recurrence);

/// Row sums of the classical and type-B Lah triangles.
BigInt lah_bell_A(int n);
BigInt lah_bell_B(int n);

/// First (n, k) where sum_j A(n,j) B(j,k) differs from the Kronecker delta.
struct InverseMismatch {
  int n;
  int k;
  BigInt expected;
  BigInt actual;
};

std::optional<InverseMismatch> first_inverse_mismatch(const Triangle& a, const Triangle& b,
                                                      int n_max);

/// True iff A * B is the identity on the leading (n_max+1) x (n_max+1) block.
bool verify_inverse_pair(const Triangle& a, const Triangle& b, int n_max);

}  // namespace typeb
