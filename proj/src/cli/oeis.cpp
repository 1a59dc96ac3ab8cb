#include <fstream>
#include <sstream>

#include "typeb/cli.hpp"
#include "typeb/errors.hpp"
#include "typeb/triangles.hpp"

namespace typeb::cli {

namespace {

bool is_integer_token(const std::string& t) {
  std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

Family oeis_family(std::string_view a_number) {
  if (a_number == "A039755") return Family::stirling2_B;
  if (a_number == "A039758") return Family::stirling1_signless_B;
  throw UnknownTag("no triangle registered for OEIS sequence '" + std::string(a_number) + "'");
}

// Row-major position -> (n, k).
std::pair<int, int> unflatten(long index) {
  int n = 0;
  while (static_cast<long>(n + 1) * (n + 2) / 2 <= index) ++n;
  return {n, static_cast<int>(index - static_cast<long>(n) * (n + 1) / 2)};
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index, value, extra;
    fields >> index >> value;
    if (value.empty() || (fields >> extra) || !is_integer_token(index) ||
        !is_integer_token(value) || index[0] == '-')
      throw MalformedFixture("b-file line " + std::to_string(line_no) +
                                 ": expected 'index value', got '" + line + "'",
                             line_no);
    entries.push_back({std::stol(index), BigInt(value, 10)});
  }
  if (entries.empty())
    throw MalformedFixture("b-file holds no entries (" + std::to_string(line_no) + " lines read)",
                           line_no);
  return entries;
}

VerificationReport cmd_oeis_check(std::string_view a_number,
                                  const std::filesystem::path& fixture) {
  const Family family = oeis_family(a_number);
  std::ifstream in(fixture);
  if (!in) throw MissingFile("cannot open fixture '" + fixture.string() + "'");
  const auto entries = parse_bfile(in);

  VerificationReport report{std::string(a_number), 0, true, std::nullopt};
  const Triangle& t = triangle(family);
  for (const auto& e : entries) {
    const auto [n, k] = unflatten(e.index);
    report.n_max = std::max(report.n_max, n);
    const BigInt v = t.at(n, k);
    if (v != e.value) {
      report.passed = false;
      report.failure = Failure{n, k, e.value.get_str(), v.get_str(),
                               "index " + std::to_string(e.index)};
      break;
    }
  }
  return report;
}

}  // namespace typeb::cli
