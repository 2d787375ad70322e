// String-level Python interface to the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l2i/derivation.h"
#include "l2i/duality.h"
#include "l2i/meaning.h"
#include "l2i/rewrite.h"
#include "l2i/testkit.h"
#include "l2i/textio.h"
#include "l2i/typing.h"

namespace py = pybind11;

namespace {

py::dict principal(const std::string& term) {
  const l2i::Principal p = l2i::infer_principal(l2i::parse_term(term));
  py::dict out;
  py::list gamma, delta;
  for (const auto& [name, f] : p.basis.gamma) gamma.append(py::make_tuple(name, l2i::print_formula(f)));
  for (const auto& [name, f] : p.basis.delta) delta.append(py::make_tuple(name, l2i::print_formula(f)));
  out["gamma"] = gamma;
  out["delta"] = delta;
  out["pol"] = std::string(1, l2i::polarity_char(p.pol));
  out["type"] = l2i::print_formula(p.type);
  return out;
}

py::tuple normalize(const std::string& term, std::size_t fuel) {
  const l2i::NormalizeResult r = l2i::normalize(l2i::parse_term(term), fuel);
  py::list steps;
  for (const auto& s : r.trace) steps.append(l2i::format_step(s));
  return py::make_tuple(l2i::print_term(r.term), r.normal(), steps);
}

std::vector<std::string> validate(const std::string& json) {
  std::vector<std::string> out;
  for (const auto& v : l2i::validate(l2i::derivation_from_json(json))) {
    out.push_back(l2i::format_path(v.path) + ": " + v.message);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_l2i, m) {
  m.doc() = "Proof and refutation terms of the two-sorted calculus";

  py::register_exception<l2i::Error>(m, "Error");

  m.def("parse_formula", [](const std::string& s) {
    return l2i::print_formula(l2i::parse_formula(s));
  }, "Parse a formula and return its canonical text.");
  m.def("parse_term", [](const std::string& s) {
    return l2i::print_term(l2i::parse_term(s));
  }, "Parse a term and return its canonical text.");
  m.def("infer", &principal, "Principal typing of a term.");
  m.def("normalize", &normalize, py::arg("term"), py::arg("fuel") = l2i::kDefaultFuel,
        "Returns (term, reached_normal_form, trace_lines).");
  m.def("dual_term", [](const std::string& s) {
    return l2i::print_term(l2i::dual_term(l2i::parse_term(s)));
  });
  m.def("dual_formula", [](const std::string& s) {
    return l2i::print_formula(l2i::dual_formula(l2i::parse_formula(s)));
  });
  m.def("dual_derivation", [](const std::string& json) {
    return l2i::derivation_to_json(l2i::dual_derivation(l2i::derivation_from_json(json)));
  });
  m.def("validate", &validate, "Violations of a derivation given as JSON text.");
  m.def("height", [](const std::string& json) {
    return l2i::height(l2i::derivation_from_json(json));
  });
  m.def("equal", [](const std::string& t, const std::string& u, bool modulo_duality,
                    std::size_t fuel) {
    return std::string(l2i::to_string(l2i::compare_denotations(
        l2i::parse_term(t), l2i::parse_term(u), modulo_duality, fuel)));
  }, py::arg("t"), py::arg("u"), py::arg("modulo_duality") = false,
     py::arg("fuel") = l2i::kDefaultFuel);
  m.def("synonymous", [](const std::string& a, const std::string& b) {
    return l2i::synonymous(l2i::derivation_from_json(a), l2i::derivation_from_json(b));
  });
  m.def("gen", [](std::uint64_t seed, std::size_t max_height) {
    l2i::GenConfig cfg;
    cfg.seed = seed;
    cfg.max_height = max_height;
    return l2i::derivation_to_json(l2i::gen_derivation(cfg));
  }, py::arg("seed"), py::arg("max_height") = 5);
}
