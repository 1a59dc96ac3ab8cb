#include <ostream>

#include <CLI11.hpp>

#include "typeb/cli.hpp"
#include "typeb/errors.hpp"
#include "typeb/power_series.hpp"

namespace typeb::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type-B Stirling, Cauchy and Lah numbers in exact arithmetic", "typeb"};
  app.require_subcommand(1);

  std::string family;
  int table_n = kDefaultTableN;
  std::string table_format = "markdown";
  auto* table = app.add_subcommand("table", "Print a triangle or sequence");
  table->add_option("family", family, "Family tag")->required();
  table->add_option("--n", table_n, "Largest row index");
  table->add_option("--format", table_format, "markdown, csv or json");

  std::string identity;
  int verify_n = kDefaultVerifyN;
  auto* verify = app.add_subcommand("verify", "Check identities exactly for n <= N");
  verify->add_option("identity", identity, "Identity tag, or 'all'")->required();
  verify->add_option("--n", verify_n, "Largest n checked");
  bool list_identities = false;
  auto* list = app.add_subcommand("list", "List table families and identity tags");
  list->add_flag("--identities", list_identities, "Only identities");

  std::string a_number;
  std::string fixture;
  auto* oeis = app.add_subcommand("oeis-check", "Compare a triangle with an OEIS b-file");
  oeis->add_option("a_number", a_number, "A039755 or A039758")->required();
  oeis->add_option("--fixture", fixture, "Path to the b-file")->required();

  std::string egf_name;
  int egf_order = -1;
  std::string egf_format = "markdown";
  auto* egf = app.add_subcommand("egf", "Coefficients of a generating function");
  egf->add_option("name", egf_name, "Generating function name")->required();
  egf->add_option("--order", egf_order,
                  "Truncation order (default: TYPEB_SERIES_ORDER or 64)");
  egf->add_option("--format", egf_format, "markdown, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*table) {
      out << render(cmd_table(family, table_n), parse_table_format(table_format));
      return kExitPass;
    }
    if (*verify) {
      bool all_passed = true;
      for (const auto& report : cmd_verify(identity, verify_n)) {
        out << render(report) << '\n';
        all_passed = all_passed && report.passed;
      }
      return all_passed ? kExitPass : kExitFail;
    }
    if (*list) {
      if (!list_identities)
        for (const auto& f : table_families()) out << "table " << f << '\n';
      for (const auto& id : identity_registry())
        out << "verify " << id.tag << "  " << id.description << '\n';
      return kExitPass;
    }
    if (*oeis) {
      const auto report = cmd_oeis_check(a_number, fixture);
      out << render(report) << '\n';
      return report.passed ? kExitPass : kExitFail;
    }
    if (*egf) {
      if (egf_order < 0) {
        const char* env = std::getenv("TYPEB_SERIES_ORDER");
        if (env != nullptr && !parse_series_order(env)) {
          err << "typeb: invalid TYPEB_SERIES_ORDER '" << env << "'\n";
          return kExitUsage;
        }
        egf_order = default_series_order();
      }
      out << render(cmd_egf(egf_name, egf_order), parse_table_format(egf_format));
      return kExitPass;
    }
  } catch (const MalformedFixture& e) {
    err << "typeb: malformed fixture (line " << e.line() << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "typeb: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace typeb::cli
