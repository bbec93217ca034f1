#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grasspi/decide.hpp"
#include "grasspi/error.hpp"
#include "grasspi/report.hpp"
#include "grasspi/selftest.hpp"
#include "grasspi/text.hpp"

namespace py = pybind11;
using namespace grasspi;

namespace {

FieldPtr field_for(unsigned q, const std::vector<std::uint32_t>& modulus) {
  if (modulus.empty()) return Field::of_order(q);
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  return Field::with_modulus(p, modulus);
}

std::string decide_json(const std::string& command, const std::string& expr, unsigned q,
                        const std::vector<std::uint32_t>& modulus, std::uint64_t seed) {
  const FieldPtr field = field_for(q, modulus);
  const FreePoly f = parse_poly(expr, field);
  Verdict v;
  if (command == "check-identity") {
    v = t_membership(f, seed);
  } else if (command == "check-central") {
    v = cp_membership(f, seed);
  } else if (command == "one-variable") {
    v = one_var_check(f);
  } else {
    throw ConfigError("unknown command " + command);
  }
  return verdict_json(f, v, {command, expr, seed}, {}).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Membership deciders for T(G) and CP(G) over F_q";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("decide_json", &decide_json, py::arg("command"), py::arg("expr"), py::arg("q"),
        py::arg("modulus") = std::vector<std::uint32_t>{}, py::arg("seed") = 0);
  m.def(
      "canonicalize",
      [](const std::string& expr, unsigned q, const std::vector<std::uint32_t>& modulus) {
        return canonicalize(parse_poly(expr, field_for(q, modulus))).format();
      },
      py::arg("expr"), py::arg("q"), py::arg("modulus") = std::vector<std::uint32_t>{});
  m.def(
      "normalize",
      [](const std::string& expr, unsigned q, const std::vector<std::uint32_t>& modulus) {
        return format_poly(parse_poly(expr, field_for(q, modulus)));
      },
      py::arg("expr"), py::arg("q"), py::arg("modulus") = std::vector<std::uint32_t>{});
  m.def(
      "reverify_json",
      [](const std::string& report, const std::string& expr, unsigned q, const std::vector<std::uint32_t>& modulus) {
        const FieldPtr field = field_for(q, modulus);
        return reverify_report(Json::parse(report), parse_poly(expr, field), field);
      },
      py::arg("report"), py::arg("expr"), py::arg("q"), py::arg("modulus") = std::vector<std::uint32_t>{});
  m.def(
      "run_criterion",
      [](int id, const std::string& level, std::uint64_t seed) {
        const auto r = run_criterion(id, level == "full" ? SelftestLevel::kFull : SelftestLevel::kQuick, seed);
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["passed"] = r.passed;
        d["seconds"] = r.seconds;
        d["checks"] = r.checks;
        d["log"] = r.log;
        d["failure"] = r.failure;
        return d;
      },
      py::arg("id"), py::arg("level") = "quick", py::arg("seed") = 0);
}
