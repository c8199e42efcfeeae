#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algred/commands.hpp"
#include "algred/error.hpp"
#include "algred/parser.hpp"
#include "algred/properties.hpp"

namespace py = pybind11;
using namespace algred;

namespace {

// Thin string-level wrappers: python callers work with canonical
// expression strings and JSON reports; the exact arithmetic stays in C++.

Poly parse_over(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly(text, make_vars(vars));
}

std::string canonical(const std::string& text, const std::vector<std::string>& vars) {
    return parse_over(text, vars).to_string();
}

std::string bracket(const std::string& f, const std::string& g,
                    const std::vector<std::string>& coords) {
    PhaseSpace space = PhaseSpace::canonical(coords);
    return poisson_bracket(parse_poly(f, space.coords()), parse_poly(g, space.coords()), space)
        .to_string();
}

std::vector<std::string> groebner_basis_of(const std::vector<std::string>& gens,
                                           const std::vector<std::string>& vars) {
    VarTablePtr table = make_vars(vars);
    std::vector<Poly> polys;
    for (const std::string& g : gens) polys.push_back(parse_poly(g, table));
    GroebnerBasis basis = groebner(polys);
    std::vector<std::string> out;
    for (const Poly& g : basis.generators()) out.push_back(g.to_string());
    return out;
}

std::string normal_form_of(const std::string& f, const std::vector<std::string>& gens,
                           const std::vector<std::string>& vars) {
    VarTablePtr table = make_vars(vars);
    std::vector<Poly> polys;
    for (const std::string& g : gens) polys.push_back(parse_poly(g, table));
    return normal_form(parse_poly(f, table), groebner(polys)).to_string();
}

std::string run_scenario_text(const std::string& text, const std::string& command,
                              std::optional<unsigned> degree,
                              std::optional<std::string> class_expr, uint64_t seed,
                              const std::string& suite) {
    Scenario sc = parse_scenario_text(text, "<python>");
    CommandOptions opts;
    opts.degree = degree;
    opts.class_expr = std::move(class_expr);
    opts.seed = seed;
    opts.suite = suite;
    return run_command(command, sc, opts).dump(2);
}

std::string run_scenario_file(const std::string& path, const std::string& command,
                              std::optional<unsigned> degree,
                              std::optional<std::string> class_expr, uint64_t seed,
                              const std::string& suite) {
    Scenario sc = load_scenario(path);
    CommandOptions opts;
    opts.degree = degree;
    opts.class_expr = std::move(class_expr);
    opts.seed = seed;
    opts.suite = suite;
    return run_command(command, sc, opts).dump(2);
}

}  // namespace

PYBIND11_MODULE(_algred, m) {
    m.doc() = "Exact algebraic reduction and reduced geometric quantization workbench";

    py::register_exception<Error>(m, "AlgredError");

    m.def("canonical", &canonical, py::arg("text"), py::arg("vars"),
          "Canonical form of an expression over the given variables.");
    m.def("poisson_bracket", &bracket, py::arg("f"), py::arg("g"), py::arg("coords"),
          "Poisson bracket over canonical pairs (p1, q1, ...), as a canonical string.");
    m.def("groebner_basis", &groebner_basis_of, py::arg("generators"), py::arg("vars"),
          "Reduced Groebner basis in graded lex order.");
    m.def("normal_form", &normal_form_of, py::arg("f"), py::arg("generators"), py::arg("vars"),
          "Canonical representative modulo the ideal.");
    m.def("run_scenario_text", &run_scenario_text, py::arg("text"), py::arg("command"),
          py::arg("degree") = std::nullopt, py::arg("class_expr") = std::nullopt,
          py::arg("seed") = 0, py::arg("suite") = "all",
          "Run a workbench command against scenario text; returns the JSON report.");
    m.def("run_scenario_file", &run_scenario_file, py::arg("path"), py::arg("command"),
          py::arg("degree") = std::nullopt, py::arg("class_expr") = std::nullopt,
          py::arg("seed") = 0, py::arg("suite") = "all",
          "Run a workbench command against a scenario file; returns the JSON report.");
}
