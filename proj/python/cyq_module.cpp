#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyq/cli.hpp"
#include "cyq/enumerative.hpp"
#include "cyq/ode.hpp"
#include "cyq/periods.hpp"
#include "cyq/suites.hpp"

namespace py = pybind11;
using namespace cyq;

namespace {

py::object fraction(const Rational &r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.str());
}

py::list fractions(const QSeries &s)
{
    py::list out;
    for (const auto &c : s.coeffs())
        out.append(fraction(c));
    return out;
}

QSeries yukawa_route(int order, const std::string &route)
{
    if (route == "ode")
        return yukawa_from_solution(solve_default(quintic_system(), std::max(order, 2)).truncate(order));
    if (route == "periods") {
        auto b = build_frobenius(order);
        return yukawa_from_periods(b, build_mirror_map(b));
    }
    throw py::value_error("route must be 'ode' or 'periods'");
}

void require_order(int order, int least)
{
    if (order < least)
        throw py::value_error("order must be at least " + std::to_string(least));
}

} // namespace

PYBIND11_MODULE(_cyq, m)
{
    m.doc() = "Exact q-expansions for the quintic mirror family";

    m.def(
        "expand",
        [](const std::string &system, int order) {
            auto sys = system_by_name(system);
            require_order(order, 1);
            auto sol = solve_default(sys, order);
            py::dict d;
            for (std::size_t i = 0; i < sol.names.size(); ++i)
                d[py::str(sol.names[i])] = fractions(sol.series[i]);
            return d;
        },
        py::arg("system") = "quintic", py::arg("order") = 20);

    m.def(
        "yukawa", [](int order, const std::string &route) { return fractions(yukawa_route(order, route)); },
        py::arg("order") = 20, py::arg("route") = "ode");

    m.def(
        "instanton_numbers",
        [](int max_degree, const std::string &route) {
            require_order(max_degree, 1);
            auto t = lambert_extract(yukawa_route(max_degree, route));
            py::list n;
            for (int d = 1; d <= t.max_degree; ++d)
                n.append(fraction(t.n[static_cast<std::size_t>(d)]));
            return py::make_tuple(fraction(t.constant), n);
        },
        py::arg("max_degree") = 10, py::arg("route") = "ode");

    m.def(
        "gw_invariants",
        [](int max_degree) {
            require_order(max_degree, 1);
            auto g = gw_from_instanton(lambert_extract(yukawa_route(max_degree, "ode")));
            py::list n;
            for (int d = 1; d <= max_degree; ++d)
                n.append(fraction(g.N[static_cast<std::size_t>(d)]));
            return n;
        },
        py::arg("max_degree") = 10);

    m.def(
        "j_function",
        [](int order) {
            require_order(order, 0);
            auto j = j_expansion(solve_default(quintic_system(), order + 2));
            return py::make_tuple(fraction(j.pole), fractions(j.regular.truncate(order)));
        },
        py::arg("order") = 9, "3125 j as (pole, [c_0, ..., c_order])");

    m.def(
        "frobenius",
        [](int order) {
            require_order(order, 0);
            auto b = build_frobenius(order);
            py::list g;
            for (const auto &s : b.g)
                g.append(fractions(s));
            return g;
        },
        py::arg("order") = 10, "the log-free parts g_0..g_3 of the Frobenius basis in z/5^5");

    m.def(
        "verify",
        [](const std::string &suite, int order) {
            auto entries = run_suite(suite, order, [](int n) { return solve_default(quintic_system(), n); });
            py::list out;
            for (const auto &e : entries) {
                py::dict d;
                d["suite"] = e.suite;
                d["name"] = e.check.name;
                d["passed"] = e.check.passed;
                d["detail"] = e.check.detail;
                d["convention"] = e.check.convention;
                d["anchor"] = e.check.anchor;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("order") = 10);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "runs the command line tool in process; returns (exit code, stdout, stderr)");

    py::register_exception<UnsupportedSystem>(m, "UnsupportedSystem", PyExc_ValueError);
}
