#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typeb/rational.hpp"

namespace typeb::cli {

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultTableN = 7;
inline constexpr int kDefaultVerifyN = 30;

enum class TableFormat { markdown, csv, json };
TableFormat parse_table_format(std::string_view tag);

/// Exact values rendered as integer or "p/q" strings. Triangle families have
/// one row per n with n+1 entries; sequence families (Cauchy, Lah-Bell) have a
/// single row holding the values for n = 0..n_max.
struct OutputTable {
  std::string family;
  int n_max = 0;
  bool triangular = true;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const OutputTable&, const OutputTable&) = default;
};

/// Families accepted by cmd_table.
std::vector<std::string> table_families();

/// Throws UnknownTag for an unknown family and OutOfRange for n_max < 0.
OutputTable cmd_table(std::string_view family, int n_max);
std::string render(const OutputTable& table, TableFormat format);
/// Inverse of render(table, json).
OutputTable parse_table_json(std::string_view text);

/// First counterexample of a failed identity. k < 0 when the identity is
/// indexed by n alone.
struct Failure {
  int n = 0;
  int k = -1;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct VerificationReport {
  std::string identity;
  int n_max = 0;
  bool passed = true;
  std::optional<Failure> failure;
};

std::string render(const VerificationReport& report);

/// A registered identity. The check returns the first failure in 0..n_max.
struct Identity {
  std::string tag;
  std::string description;
  std::function<std::optional<Failure>(int n_max)> check;
};

const std::vector<Identity>& identity_registry();

/// Runs one identity, or every registered identity for "all" (in registry
/// order; independent identities run concurrently).
std::vector<VerificationReport> cmd_verify(std::string_view identity, int n_max);

/// One "index value" pair of an OEIS b-file.
struct BFileEntry {
  long index;
  BigInt value;
};

/// Reads a b-file: "index value" per line, '#' comments and blank lines
/// skipped. Throws MalformedFixture (with the 1-based line number) on a bad
/// line or when the file lists no entries.
std::vector<BFileEntry> parse_bfile(std::istream& in);

/// Compares the named triangle, flattened row-major from index 0, with every
/// entry of the fixture. Supported: A039755 (S_B) and A039758 (c_B).
/// Throws MissingFile, MalformedFixture or UnknownTag.
VerificationReport cmd_oeis_check(std::string_view a_number, const std::filesystem::path& fixture);

/// Coefficients [x^n] and n![x^n] of a named exponential generating function.
struct EgfListing {
  std::string name;
  std::vector<Rational> coefficients;
  std::vector<Rational> scaled;
};

/// Names: cauchy1_B, cauchy2_B, cauchy1_A, cauchy2_A, lah_bell_A, lah_bell_B,
/// lah_B_column(k) (also written lah_B_column:k).
EgfListing cmd_egf(std::string_view name, int order);
std::string render(const EgfListing& listing, TableFormat format);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace typeb::cli
