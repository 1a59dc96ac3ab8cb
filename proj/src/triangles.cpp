#include "typeb/triangles.hpp"

#include <array>

#include "typeb/errors.hpp"

namespace typeb {

namespace {

void check_index(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRange("triangle index (" + std::to_string(n) + ", " + std::to_string(k) +
                     ") outside 0 <= k <= n");
}

BigInt with_sign(BigInt v, int n, int k) {
  if ((n - k) % 2 != 0) v = -v;
  return v;
}

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::stirling2_A, "stirling2_A"},
    {Family::stirling1_signless_A, "stirling1_signless_A"},
    {Family::stirling1_signed_A, "stirling1_signed_A"},
    {Family::stirling2_B, "stirling2_B"},
    {Family::stirling1_signless_B, "stirling1_signless_B"},
    {Family::stirling1_signed_B, "stirling1_signed_B"},
    {Family::lah_A, "lah_A"},
    {Family::lah_B, "lah_B"},
    {Family::lah_B_signed, "lah_B_signed"},
}};

}  // namespace

Family parse_family(std::string_view tag) {
  for (const auto& [f, name] : kFamilyNames)
    if (name == tag) return f;
  throw UnknownTag("unknown triangle family '" + std::string(tag) + "'");
}

std::string_view to_string(Family f) {
  for (const auto& [g, name] : kFamilyNames)
    if (g == f) return name;
  return "?";
}

BigInt Triangle::at(int n, int k) const {
  check_index(n, k);
  std::lock_guard lock(mutex_);
  extend_to(n);
  return rows_[n][k];
}

std::vector<BigInt> Triangle::row(int n) const {
  check_index(n, 0);
  std::lock_guard lock(mutex_);
  extend_to(n);
  return rows_[n];
}

// Caller holds mutex_.
void Triangle::extend_to(int n) const {
  while (static_cast<int>(rows_.size()) <= n) {
    const int m = static_cast<int>(rows_.size());
    std::vector<BigInt> r(m + 1);
    for (int k = 0; k <= m; ++k) r[k] = next_entry(m, k);
    rows_.push_back(std::move(r));
  }
}

// Caller holds mutex_; rows 0..n-1 are present.
BigInt Triangle::next_entry(int n, int k) const {
  switch (family_) {
    case Family::stirling1_signed_A:
      return with_sign(triangle(Family::stirling1_signless_A).at(n, k), n, k);
    case Family::stirling1_signed_B:
      return with_sign(triangle(Family::stirling1_signless_B).at(n, k), n, k);
    case Family::lah_B_signed:
      return with_sign(triangle(Family::lah_B).at(n, k), n, k);
    default:
      break;
  }
  if (n == 0) return 1;
  // Out-of-range neighbours are zero.
  const auto& prev = rows_[n - 1];
  const BigInt diag = k >= 1 ? prev[k - 1] : BigInt(0);
  const BigInt same = k <= n - 1 ? prev[k] : BigInt(0);
  switch (family_) {
    case Family::stirling2_A: return diag + k * same;
    case Family::stirling1_signless_A: return diag + (n - 1) * same;
    case Family::stirling2_B: return diag + (2 * k + 1) * same;
    case Family::stirling1_signless_B: return diag + (2 * n - 1) * same;
    case Family::lah_A: return diag + (n - 1 + k) * same;
    case Family::lah_B: return diag + 2 * (n + k) * same;
    default: break;
  }
  throw UnknownTag("triangle family without a recurrence");
}

const Triangle& triangle(Family family) {
  static const std::array<Triangle, 9> tables{
      Triangle(Family::stirling2_A),          Triangle(Family::stirling1_signless_A),
      Triangle(Family::stirling1_signed_A),   Triangle(Family::stirling2_B),
      Triangle(Family::stirling1_signless_B), Triangle(Family::stirling1_signed_B),
      Triangle(Family::lah_A),                Triangle(Family::lah_B),
      Triangle(Family::lah_B_signed),
  };
  return tables.at(static_cast<std::size_t>(family));
}

BigInt stirling2_B(int n, int k) { return triangle(Family::stirling2_B).at(n, k); }
BigInt stirling1_signless_B(int n, int k) {
  return triangle(Family::stirling1_signless_B).at(n, k);
}
BigInt stirling1_signed_B(int n, int k) { return triangle(Family::stirling1_signed_B).at(n, k); }
BigInt stirling2_A(int n, int k) { return triangle(Family::stirling2_A).at(n, k); }
BigInt stirling1_signless_A(int n, int k) {
  return triangle(Family::stirling1_signless_A).at(n, k);
}
BigInt stirling1_signed_A(int n, int k) { return triangle(Family::stirling1_signed_A).at(n, k); }

BigInt stirling2_B_explicit(int n, int k) {
  check_index(n, k);
  BigInt acc = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2 * j + 1, n);
    term *= binomial(k, j);
    if ((k - j) % 2 != 0) term = -term;
    acc += term;
  }
  const BigInt den = pow2(k) * factorial(k);
  return acc / den;
}

BigInt lah_A(int n, int k) {
  check_index(n, k);
  if (k == 0) return n == 0 ? 1 : 0;
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

LahRoute parse_lah_route(std::string_view tag) {
  if (tag == "closed_form") return LahRoute::closed_form;
  if (tag == "recurrence") return LahRoute::recurrence;
  if (tag == "convolution") return LahRoute::convolution;
  if (tag == "falling_factorial") return LahRoute::falling_factorial;
  throw UnknownTag("unknown Lah route '" + std::string(tag) + "'");
}

std::string_view to_string(LahRoute r) {
  switch (r) {
    case LahRoute::closed_form: return "closed_form";
    case LahRoute::recurrence: return "recurrence";
    case LahRoute::convolution: return "convolution";
    case LahRoute::falling_factorial: return "falling_factorial";
  }
  return "?";
}

BigInt lah_B(int n, int k, LahRoute route) {
  check_index(n, k);
  switch (route) {
    case LahRoute::closed_form: {
      const BigInt b = binomial(n, k);
      return b * b * pow2(n - k) * factorial(n - k);
    }
    case LahRoute::recurrence:
      return triangle(Family::lah_B).at(n, k);
    case LahRoute::convolution: {
      BigInt acc = 0;
      for (int j = k; j <= n; ++j) acc += stirling1_signless_B(n, j) * stirling2_B(j, k);
      return acc;
    }
    case LahRoute::falling_factorial: {
      // (x-1)(x-3)...(x-2(n-k)+1) at x = 2n+1.
      BigInt prod = 1;
      for (int i = 1; i <= n - k; ++i) prod *= (2 * n + 1) - (2 * i - 1);
      return binomial(n, k) * prod;
    }
  }
  throw UnknownTag("unknown Lah route");
}

BigInt lah_bell_A(int n) {
  check_index(n, 0);
  BigInt acc = 0;
  for (const auto& v : triangle(Family::lah_A).row(n)) acc += v;
  return acc;
}

BigInt lah_bell_B(int n) {
  check_index(n, 0);
  BigInt acc = 0;
  for (const auto& v : triangle(Family::lah_B).row(n)) acc += v;
  return acc;
}

std::optional<InverseMismatch> first_inverse_mismatch(const Triangle& a, const Triangle& b,
                                                      int n_max) {
  std::vector<std::vector<BigInt>> ra, rb;
  for (int n = 0; n <= n_max; ++n) {
    ra.push_back(a.row(n));
    rb.push_back(b.row(n));
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt acc = 0;
      for (int j = k; j <= n; ++j) acc += ra[n][j] * rb[j][k];
      const BigInt expected = (n == k) ? 1 : 0;
      if (acc != expected) return InverseMismatch{n, k, expected, acc};
    }
  }
  return std::nullopt;
}

bool verify_inverse_pair(const Triangle& a, const Triangle& b, int n_max) {
  return !first_inverse_mismatch(a, b, n_max).has_value();
}

}  // namespace typeb
