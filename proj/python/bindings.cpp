// Python bindings. Rationals cross the boundary as "p/q" strings; the
// package wrapper turns them into fractions.Fraction.
#include "dcas/diagonal.hpp"
#include "dcas/elliptic.hpp"
#include "dcas/error.hpp"
#include "dcas/json_io.hpp"
#include "dcas/lattice.hpp"
#include "dcas/multipoly.hpp"
#include "dcas/ode.hpp"
#include "dcas/registry.hpp"
#include "dcas/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace dcas;

namespace {

using Strings = std::vector<std::string>;

Strings strs(const PowerSeries& s) {
    Strings out;
    for (const auto& c : s.coeffs()) out.push_back(to_string(c));
    return out;
}

std::vector<Rat> rats(const Strings& v) {
    std::vector<Rat> out;
    for (const auto& s : v) out.push_back(parse_rat(s));
    return out;
}

PowerSeries series_of(const Strings& coeffs, const std::string& var) { return PowerSeries(rats(coeffs), var); }

CurvePoly curve_of(const std::string& text, const VarList& vars, const std::string& qvar, const std::string& param) {
    if (vars.size() != 2) throw Error(Errc::InvalidArgument, "vars must name the two curve variables");
    if (qvar != vars[0] && qvar != vars[1]) throw Error(Errc::InvalidArgument, "quadratic_in must be a curve variable");
    const std::string other = qvar == vars[0] ? vars[1] : vars[0];
    MultiPoly m = parse_polynomial(text, {vars[0], vars[1], param});
    return CurvePoly::from_multipoly(m, other, qvar, param);
}

}  // namespace

PYBIND11_MODULE(_dcas, m) {
    m.doc() = "Exact diagonals, Newton-polygon genus, j-invariants and ODE guessing over Q";
    m.attr("DEFAULT_SEED") = kDefaultSeed;

    static py::exception<Error> exc(m, "DcasError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(exc.ptr(), e.what());
        }
    });

    m.def(
        "diagonal",
        [](const std::string& expr, const VarList& vars, int order, bool force) {
            return strs(diagonal(parse_expression(expr, vars), order, force));
        },
        py::arg("expr"), py::arg("vars"), py::arg("order"), py::arg("force") = false);

    m.def(
        "genus",
        [](const std::string& curve, const VarList& vars) {
            if (vars.size() < 2) throw Error(Errc::InvalidArgument, "vars needs the two curve variables");
            return to_json(generic_genus(parse_polynomial(curve, vars), vars[0], vars[1])).dump();
        },
        py::arg("curve"), py::arg("vars"));

    m.def(
        "j_invariant",
        [](const std::string& curve, const VarList& vars, const std::string& qvar, const std::string& param) {
            return j_invariant(curve_of(curve, vars, qvar, param), qvar).str();
        },
        py::arg("curve"), py::arg("vars"), py::arg("quadratic_in"), py::arg("param") = "p");

    m.def(
        "hauptmodul",
        [](const std::string& curve, const VarList& vars, const std::string& qvar,
           const std::string& param) -> std::optional<std::string> {
            Hauptmodul h = hauptmodul(curve_of(curve, vars, qvar, param), qvar);
            if (h.infinite) return std::nullopt;
            return h.value.str();
        },
        py::arg("curve"), py::arg("vars"), py::arg("quadratic_in"), py::arg("param") = "p");

    m.def(
        "hypergeom",
        [](const Strings& upper, const Strings& lower, int order) {
            return strs(hypergeom_series(rats(upper), rats(lower), order));
        },
        py::arg("upper"), py::arg("lower"), py::arg("order"));

    m.def(
        "pullback",
        [](const std::vector<std::pair<std::string, std::string>>& prefactor, const Strings& upper,
           const Strings& lower, const std::string& h, int order, const std::string& var) {
            AlgebraicPrefactor a;
            for (const auto& [base, e] : prefactor) a.times(parse_unirat(base, var), parse_rat(e));
            return strs(pullbacked_solution(a, rats(upper), rats(lower), parse_unirat(h, var), order));
        },
        py::arg("prefactor"), py::arg("upper"), py::arg("lower"), py::arg("h"), py::arg("order"),
        py::arg("var") = "x");

    m.def(
        "guess_ode",
        [](const Strings& coeffs, int max_order, int max_degree, int margin) -> std::optional<Strings> {
            auto op = guess_ode(series_of(coeffs, "x"), max_order, max_degree, margin);
            if (!op) return std::nullopt;
            const DiffOp canon = op->canonical();
            Strings out;
            for (const auto& c : canon.coeffs()) out.push_back(c.str());
            return out;
        },
        py::arg("coeffs"), py::arg("max_order"), py::arg("max_degree"), py::arg("margin") = kGuessMargin);

    m.def(
        "apply_ode",
        [](const Strings& op, const Strings& coeffs) {
            std::vector<UniPoly> c;
            for (const auto& s : op) c.push_back(unipoly_from_json(s, "x"));
            return strs(apply(DiffOp(c), series_of(coeffs, "x")));
        },
        py::arg("op"), py::arg("coeffs"));

    m.def(
        "verify",
        [](std::optional<std::string> name, std::optional<std::string> tag, std::optional<std::string> registry,
           std::uint64_t seed) {
            Registry reg = Registry::load_file(registry ? *registry : Registry::default_path());
            py::gil_scoped_release release;
            if (name) return reg.run_case(*name, seed).to_json().dump();
            return reg.run_all(tag, seed).to_json().dump();
        },
        py::arg("case") = py::none(), py::arg("tag") = py::none(), py::arg("registry") = py::none(),
        py::arg("seed") = kDefaultSeed);
}
