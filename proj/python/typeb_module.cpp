#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "typeb/cauchy.hpp"
#include "typeb/cli.hpp"
#include "typeb/errors.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/riordan.hpp"
#include "typeb/triangles.hpp"

namespace py = pybind11;
using namespace typeb;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_py(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

Rational from_py(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

py::list to_py(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_py(r));
  return out;
}

py::list to_py(std::span<const Rational> v) { return to_py(std::vector<Rational>(v.begin(), v.end())); }

std::vector<Rational> from_py_list(const py::iterable& values) {
  std::vector<Rational> out;
  for (auto v : values) out.push_back(from_py(v));
  return out;
}

py::dict to_py(const cli::VerificationReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["n_max"] = r.n_max;
  d["passed"] = r.passed;
  if (r.failure) {
    py::dict f;
    f["n"] = r.failure->n;
    f["k"] = r.failure->k;
    f["expected"] = r.failure->expected;
    f["actual"] = r.failure->actual;
    f["detail"] = r.failure->detail;
    d["failure"] = f;
  } else {
    d["failure"] = py::none();
  }
  return d;
}

template <BigInt (*F)(int, int)>
void def_triangle(py::module_& m, const char* name, const char* doc) {
  m.def(name, [](int n, int k) { return to_py(F(n, k)); }, py::arg("n"), py::arg("k"), doc);
}

template <Rational (*F)(int, CauchyRoute)>
void def_cauchy(py::module_& m, const char* name, const char* doc) {
  m.def(
      name,
      [](int n, const std::string& route) { return to_py(F(n, parse_cauchy_route(route))); },
      py::arg("n"), py::arg("route") = "integral", doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact type-B Stirling, Cauchy and Lah numbers";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "TypebError", PyExc_ValueError);

  def_triangle<stirling2_B>(m, "stirling2_B", "Type-B Stirling number of the second kind");
  def_triangle<stirling1_signless_B>(m, "stirling1_signless_B", "Signless type-B Stirling number of the first kind");
  def_triangle<stirling1_signed_B>(m, "stirling1_signed_B", "Signed type-B Stirling number of the first kind");
  def_triangle<stirling2_A>(m, "stirling2_A", "Classical Stirling number of the second kind");
  def_triangle<stirling1_signless_A>(m, "stirling1_signless_A", "Classical signless Stirling number of the first kind");
  def_triangle<lah_A>(m, "lah_A", "Classical Lah number");
  m.def(
      "lah_B",
      [](int n, int k, const std::string& route) { return to_py(lah_B(n, k, parse_lah_route(route))); },
      py::arg("n"), py::arg("k"), py::arg("route") = "recurrence",
      "Type-B Lah number by route closed_form, recurrence, convolution or falling_factorial");
  m.def("lah_bell_A", [](int n) { return to_py(lah_bell_A(n)); }, py::arg("n"));
  m.def("lah_bell_B", [](int n) { return to_py(lah_bell_B(n)); }, py::arg("n"));

  def_cauchy<cauchy_first_B>(m, "cauchy_first_B", "C_n^B by route integral, stirling_sum, recurrence or egf");
  def_cauchy<cauchy_second_B>(m, "cauchy_second_B", "c_n^B by route integral, stirling_sum, recurrence or egf");
  def_cauchy<cauchy_first_A>(m, "cauchy_first_A", "Classical C_n by route integral, stirling_sum or egf");
  def_cauchy<cauchy_second_A>(m, "cauchy_second_A", "Classical c_n by route integral, stirling_sum or egf");

  m.def("check_recurrence_first_B", &check_recurrence_first_B, py::arg("n"));
  m.def("check_recurrence_second_B", &check_recurrence_second_B, py::arg("n"));
  m.def("check_harmonic_identity", &check_harmonic_identity, py::arg("n"));
  m.def("check_lah_inversion", &check_lah_inversion, py::arg("n"));

  m.def(
      "factorial_polynomial",
      [](const std::string& basis, int n) { return to_py(basis_polynomial(parse_basis(basis), n).coefficients()); },
      py::arg("basis"), py::arg("n"),
      "Monomial coefficients (ascending degree) of the n-th basis polynomial");
  m.def(
      "to_basis",
      [](const py::iterable& coeffs, const std::string& basis) {
        return to_py(to_basis(Polynomial(from_py_list(coeffs)), parse_basis(basis)));
      },
      py::arg("coefficients"), py::arg("basis"));
  m.def(
      "from_basis",
      [](const py::iterable& coeffs, const std::string& basis) {
        return to_py(from_basis(from_py_list(coeffs), parse_basis(basis)).coefficients());
      },
      py::arg("coefficients"), py::arg("basis"));
  m.def(
      "integrate01", [](const py::iterable& coeffs) { return to_py(integrate01(Polynomial(from_py_list(coeffs)))); },
      py::arg("coefficients"));

  m.def(
      "riordan_entry",
      [](const std::string& name, int n, int k, int order) {
        return to_py(named_array(parse_named_array(name), order).entry(n, k));
      },
      py::arg("name"), py::arg("n"), py::arg("k"), py::arg("order") = kDefaultArrayOrder);
  m.def(
      "derive_cauchy_egf",
      [](const std::string& kind, int order) {
        if (kind != "first" && kind != "second") throw UnknownTag("kind must be 'first' or 'second'");
        return to_py(derive_cauchy_egf(kind == "first" ? CauchyKind::first : CauchyKind::second, order).coefficients());
      },
      py::arg("kind"), py::arg("order") = kDefaultArrayOrder);

  m.def(
      "egf",
      [](const std::string& name, int order) {
        const auto listing = cli::cmd_egf(name, order);
        py::dict d;
        d["name"] = listing.name;
        d["coefficients"] = to_py(listing.coefficients);
        d["scaled"] = to_py(listing.scaled);
        return d;
      },
      py::arg("name"), py::arg("order"));
  m.def(
      "table",
      [](const std::string& family, int n, const std::string& format) {
        return cli::render(cli::cmd_table(family, n), cli::parse_table_format(format));
      },
      py::arg("family"), py::arg("n") = cli::kDefaultTableN, py::arg("format") = "json");
  m.def(
      "verify",
      [](const std::string& identity, int n) {
        py::list out;
        std::vector<cli::VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = cli::cmd_verify(identity, n);
        }
        for (const auto& r : reports) out.append(to_py(r));
        return out;
      },
      py::arg("identity"), py::arg("n") = cli::kDefaultVerifyN);
  m.def(
      "oeis_check", [](const std::string& a, const std::string& path) { return to_py(cli::cmd_oeis_check(a, path)); },
      py::arg("a_number"), py::arg("fixture"));
  m.def("identities", [] {
    std::vector<std::string> tags;
    for (const auto& id : cli::identity_registry()) tags.push_back(id.tag);
    return tags;
  });
}
