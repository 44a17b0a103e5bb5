#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eg/calculus.hpp"
#include "eg/cli.hpp"
#include "eg/continuum.hpp"
#include "eg/notation.hpp"
#include "eg/render.hpp"
#include "eg/search.hpp"
#include "eg/semantics.hpp"

namespace py = pybind11;
using namespace eg;

namespace {

py::dict check(const std::string& script) {
  ProofScript ps = parse_script(script);
  CheckReport rep = check_script(ps);
  py::list trace;
  for (const auto& g : rep.trace) trace.append(print_graph(g));
  py::dict d;
  d["valid"] = rep.valid();
  d["failed_step"] = rep.failed_step ? py::cast(*rep.failed_step) : py::none();
  d["reason"] = rep.reason;
  d["final_graph"] = print_graph(rep.final_graph);
  d["trace"] = trace;
  return d;
}

std::optional<std::string> prove(const std::string& system, const std::string& goal,
                                 const std::string& from, int depth) {
  const System s = parse_system(system);
  SearchBounds b;
  b.max_depth = depth;
  auto ps = derive(s, parse_graph(from, dialect_of(s)), parse_graph(goal, dialect_of(s)), b);
  if (!ps) return std::nullopt;
  return print_script(*ps);
}

Logic logic_named(const std::string& name) { return logic_of(parse_dialect(name)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Existential graphs: notation, rules, search, oracles, rendering";

  py::register_exception<Error>(m, "EgError", PyExc_ValueError);

  m.def("canonical", [](const std::string& g, const std::string& dialect) {
    return print_graph(canonicalize(parse_graph(g, parse_dialect(dialect))));
  }, py::arg("graph"), py::arg("dialect") = "intuitionistic");

  m.def("equals", [](const std::string& a, const std::string& b, const std::string& dialect) {
    const Dialect d = parse_dialect(dialect);
    return equals(parse_graph(a, d), parse_graph(b, d));
  }, py::arg("a"), py::arg("b"), py::arg("dialect") = "intuitionistic");

  m.def("check_script", &check, py::arg("script"),
        "Check a proof script; returns a dict with valid, failed_step, reason, "
        "final_graph and trace.");

  m.def("prove", &prove, py::arg("system"), py::arg("goal"), py::arg("start") = "",
        py::arg("depth") = 12, "A proof script text, or None.");

  m.def("taut", [](const std::string& logic, const std::string& f) {
    return taut(logic_named(logic), parse_formula(f));
  }, py::arg("logic"), py::arg("formula"));

  m.def("entails", [](const std::string& logic, const std::string& a, const std::string& b) {
    return entails(logic_named(logic), parse_formula(a), parse_formula(b));
  }, py::arg("logic"), py::arg("premise"), py::arg("conclusion"));

  m.def("countermodel", [](const std::string& f, int max_worlds) -> std::optional<std::string> {
    auto km = kripke_countermodel(parse_formula(f), max_worlds);
    if (!km) return std::nullopt;
    return print_kripke(*km);
  }, py::arg("formula"), py::arg("max_worlds") = 4);

  m.def("to_formula", [](const std::string& g, const std::string& dialect) {
    return print_formula(graph_to_formula(parse_graph(g, parse_dialect(dialect))));
  }, py::arg("graph"), py::arg("dialect") = "intuitionistic");

  m.def("to_graph", [](const std::string& f, const std::string& dialect) {
    return print_graph(formula_to_graph(parse_formula(f), parse_dialect(dialect)));
  }, py::arg("formula"), py::arg("dialect") = "intuitionistic");

  m.def("render_svg", [](const std::string& g, const std::string& dialect) {
    return render_svg(parse_graph(g, parse_dialect(dialect)));
  }, py::arg("graph"), py::arg("dialect") = "intuitionistic");

  m.def("ordinal_add", [](const std::string& a, const std::string& b) {
    return print_ordinal(ord_add(parse_ordinal(a), parse_ordinal(b)));
  });
  m.def("ordinal_sub_left", [](const std::string& b, const std::string& d) {
    return print_ordinal(ord_sub_left(parse_ordinal(b), parse_ordinal(d)));
  });
  m.def("ordinal_cmp", [](const std::string& a, const std::string& b) {
    auto c = ord_cmp(parse_ordinal(a), parse_ordinal(b));
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  });

  m.def("lex_compare", [](const std::string& x, const std::string& y) {
    return to_string(lex_compare(parse_element(x), parse_element(y)));
  });
  m.def("extends", [](const std::string& x, const std::string& y) {
    return extends(parse_element(x), parse_element(y));
  });
  m.def("tail", [](const std::string& x, const std::string& y) {
    return print_element(tail(parse_element(x), parse_element(y)));
  });
  m.def("concat", [](const std::string& x, const std::string& z) {
    return print_element(concat(parse_element(x), parse_element(z)));
  });
  m.def("domain", [](const std::string& x) {
    return print_ordinal(elem_domain(parse_element(x)));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line in-process: (exit code, stdout, stderr).");
}
