#include <sstream>

#include <nlohmann/json.hpp>

#include "typeb/cauchy.hpp"
#include "typeb/cli.hpp"
#include "typeb/errors.hpp"
#include "typeb/triangles.hpp"

namespace typeb::cli {

namespace {

constexpr std::string_view kTriangleFamilies[] = {
    "stirling2_B", "stirling1_signless_B", "stirling1_signed_B", "lah_B", "lah_B_signed",
    "stirling2_A", "stirling1_signless_A", "stirling1_signed_A", "lah_A"};

constexpr std::string_view kSequenceFamilies[] = {"cauchy1_B", "cauchy2_B", "cauchy1_A",
                                                  "cauchy2_A", "lah_bell_B", "lah_bell_A"};

std::vector<std::string> sequence_values(std::string_view family, int n_max) {
  std::vector<std::string> out;
  auto push_rationals = [&](CauchyKind kind, CauchyType type) {
    for (const auto& v : cauchy_sequence(kind, type, n_max, CauchyRoute::integral).values)
      out.push_back(v.str());
  };
  if (family == "cauchy1_B") push_rationals(CauchyKind::first, CauchyType::B);
  else if (family == "cauchy2_B") push_rationals(CauchyKind::second, CauchyType::B);
  else if (family == "cauchy1_A") push_rationals(CauchyKind::first, CauchyType::A);
  else if (family == "cauchy2_A") push_rationals(CauchyKind::second, CauchyType::A);
  else if (family == "lah_bell_B")
    for (int n = 0; n <= n_max; ++n) out.push_back(lah_bell_B(n).get_str());
  else if (family == "lah_bell_A")
    for (int n = 0; n <= n_max; ++n) out.push_back(lah_bell_A(n).get_str());
  return out;
}

std::string join(const std::vector<std::string>& cells, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

}  // namespace

TableFormat parse_table_format(std::string_view tag) {
  if (tag == "markdown") return TableFormat::markdown;
  if (tag == "csv") return TableFormat::csv;
  if (tag == "json") return TableFormat::json;
  throw UnknownTag("unknown output format '" + std::string(tag) + "'");
}

std::vector<std::string> table_families() {
  std::vector<std::string> out(std::begin(kTriangleFamilies), std::end(kTriangleFamilies));
  out.insert(out.end(), std::begin(kSequenceFamilies), std::end(kSequenceFamilies));
  return out;
}

OutputTable cmd_table(std::string_view family, int n_max) {
  if (n_max < 0) throw OutOfRange("n_max must be nonnegative, got " + std::to_string(n_max));
  OutputTable table{std::string(family), n_max, true, {}};
  for (auto tag : kSequenceFamilies) {
    if (tag == family) {
      table.triangular = false;
      table.rows.push_back(sequence_values(family, n_max));
      return table;
    }
  }
  const Triangle& t = triangle(parse_family(family));
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::string> row;
    for (const auto& v : t.row(n)) row.push_back(v.get_str());
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render(const OutputTable& table, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::csv:
      for (const auto& row : table.rows) os << join(row, ",") << '\n';
      break;
    case TableFormat::json: {
      nlohmann::json j;
      j["family"] = table.family;
      j["n_max"] = table.n_max;
      j["rows"] = table.rows;
      os << j.dump() << '\n';
      break;
    }
    case TableFormat::markdown: {
      const int width = table.n_max + 1;
      os << "| n |";
      for (int k = 0; k < width; ++k) os << ' ' << (table.triangular ? "k=" : "") << k << " |";
      os << "\n|---|";
      for (int k = 0; k < width; ++k) os << "---|";
      os << '\n';
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        os << "| " << (table.triangular ? std::to_string(n) : table.family) << " |";
        for (int k = 0; k < width; ++k) {
          const auto& row = table.rows[n];
          os << ' ' << (k < static_cast<int>(row.size()) ? row[k] : "") << " |";
        }
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

OutputTable parse_table_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  OutputTable table;
  table.family = j.at("family").get<std::string>();
  table.n_max = j.at("n_max").get<int>();
  table.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  table.triangular = true;
  for (auto tag : kSequenceFamilies)
    if (tag == table.family) table.triangular = false;
  return table;
}

}  // namespace typeb::cli
