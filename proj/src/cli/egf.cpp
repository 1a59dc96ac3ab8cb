#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "typeb/cauchy.hpp"
#include "typeb/cli.hpp"
#include "typeb/errors.hpp"

namespace typeb::cli {

namespace {

std::optional<int> lah_column_index(std::string_view name) {
  constexpr std::string_view prefix = "lah_B_column";
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  else if (!rest.empty() && rest.front() == ':')
    rest = rest.substr(1);
  else
    return std::nullopt;
  int k = 0;
  const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc{} || end != rest.data() + rest.size() || k < 0) return std::nullopt;
  return k;
}

PowerSeries one_minus(long a, int order) {
  const Rational c[] = {Rational(1), Rational(-a)};
  return PowerSeries::polynomial(c, order);
}

PowerSeries named_egf(std::string_view name, int order) {
  if (name == "cauchy1_B") return cauchy_egf_closed_form(CauchyKind::first, CauchyType::B, order);
  if (name == "cauchy2_B") return cauchy_egf_closed_form(CauchyKind::second, CauchyType::B, order);
  if (name == "cauchy1_A") return cauchy_egf_closed_form(CauchyKind::first, CauchyType::A, order);
  if (name == "cauchy2_A") return cauchy_egf_closed_form(CauchyKind::second, CauchyType::A, order);
  const auto x = PowerSeries::monomial(1, 1, order);
  if (name == "lah_bell_A") return exp0(x * pow_rational(one_minus(1, order), -1));
  if (name == "lah_bell_B") {
    const auto inv = pow_rational(one_minus(2, order), -1);
    return inv * exp0(x * inv);
  }
  if (const auto k = lah_column_index(name)) {
    // x^k / ((1-2x)^(k+1) k!)
    return PowerSeries::monomial(Rational(BigInt(1), factorial(*k)), *k, order) *
           pow_rational(one_minus(2, order), Rational(-(*k + 1)));
  }
  throw UnknownTag("unknown generating function '" + std::string(name) + "'");
}

}  // namespace

EgfListing cmd_egf(std::string_view name, int order) {
  if (order < 0) throw OutOfRange("order must be nonnegative, got " + std::to_string(order));
  const auto s = named_egf(name, order);
  EgfListing out{std::string(name), {}, egf_sequence(s)};
  out.coefficients.assign(s.coefficients().begin(), s.coefficients().end());
  return out;
}

std::string render(const EgfListing& listing, TableFormat format) {
  std::ostringstream os;
  const auto n_max = listing.coefficients.size();
  switch (format) {
    case TableFormat::json: {
      nlohmann::json j;
      j["name"] = listing.name;
      j["order"] = static_cast<int>(n_max) - 1;
      std::vector<std::string> c, s;
      for (std::size_t n = 0; n < n_max; ++n) {
        c.push_back(listing.coefficients[n].str());
        s.push_back(listing.scaled[n].str());
      }
      j["coefficients"] = c;
      j["scaled"] = s;
      os << j.dump() << '\n';
      break;
    }
    case TableFormat::csv:
      os << "n,coefficient,scaled\n";
      for (std::size_t n = 0; n < n_max; ++n)
        os << n << ',' << listing.coefficients[n] << ',' << listing.scaled[n] << '\n';
      break;
    case TableFormat::markdown:
      os << "| n | [x^n] | n! [x^n] |\n|---|---|---|\n";
      for (std::size_t n = 0; n < n_max; ++n)
        os << "| " << n << " | " << listing.coefficients[n] << " | " << listing.scaled[n]
           << " |\n";
      break;
  }
  return os.str();
}

}  // namespace typeb::cli
