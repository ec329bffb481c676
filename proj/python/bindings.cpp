#include "touchard/cli.hpp"
#include "touchard/identities.hpp"
#include "touchard/serialize.hpp"
#include "touchard/stirling.hpp"
#include "touchard/touchard.hpp"
#include "touchard/weyl.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace touchard;

namespace {

// Coefficients cross the boundary as "p/q" strings; the Python layer turns
// them into fractions.Fraction.
std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs())
        out.push_back(c.to_string());
    return out;
}

Form form_of(bool as_printed) { return as_printed ? Form::as_printed : Form::corrected; }

Series scalar_series(const std::vector<std::string>& coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("series needs at least the t^0 coefficient");
    std::vector<Poly> c;
    for (const auto& s : coeffs)
        c.emplace_back(Rational::parse(s));
    return Series(static_cast<unsigned>(coeffs.size() - 1), std::move(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact generalized Touchard polynomials and Stirling numbers";

    m.def("touchard_rodrigues", [](unsigned mm, unsigned n) {
        return coeff_strings(touchard_rodrigues(mm, n).poly);
    }, py::arg("m"), py::arg("n"));
    m.def("touchard_recurrence", [](unsigned mm, unsigned n) {
        return coeff_strings(touchard_recurrence(mm, n).poly);
    }, py::arg("m"), py::arg("n"));
    m.def("touchard_explicit", [](unsigned mm, unsigned n, bool as_printed) {
        return coeff_strings(touchard_explicit(mm, n, form_of(as_printed)).poly);
    }, py::arg("m"), py::arg("n"), py::arg("as_printed") = false);

    m.def("bell_numbers", [](unsigned n_max) {
        std::vector<std::string> out;
        for (const auto& b : bell_numbers(n_max))
            out.push_back(b.get_str());
        return out;
    }, py::arg("n_max"));
    m.def("lowering_check", &lowering_check, py::arg("n"));

    m.def("stirling2", [](unsigned n, unsigned k) { return stirling2(n, k).to_string(); },
          py::arg("n"), py::arg("k"));
    m.def("gen_stirling", [](unsigned mm, unsigned n, unsigned k, bool as_printed) {
        return gen_stirling(mm, n, k, form_of(as_printed)).to_string();
    }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("as_printed") = false);
    m.def("triangle_from_weyl", [](unsigned mm, unsigned n) {
        std::vector<std::string> out;
        for (const auto& v : triangle_from_weyl(mm, n))
            out.push_back(v.to_string());
        return out;
    }, py::arg("m"), py::arg("n"));
    m.def("triangle_json", [](unsigned mm, unsigned n_max, bool as_printed) {
        return to_json(make_triangle(mm, n_max, form_of(as_printed))).dump();
    }, py::arg("m"), py::arg("n_max"), py::arg("as_printed") = false);
    m.def("hoppe_derivative", [](const std::vector<std::string>& f, unsigned order) {
        return hoppe_derivative(scalar_series(f), order).to_string();
    }, py::arg("f"), py::arg("order"));

    m.def("power_qd_json", [](unsigned mm, unsigned n) { return to_json(power_qd(mm, n)).dump(); },
          py::arg("m"), py::arg("n"));

    m.def("laguerre", [](unsigned n) { return coeff_strings(laguerre(n)); }, py::arg("n"));
    m.def("bessel_poly", [](int n) { return coeff_strings(bessel_poly(n)); }, py::arg("n"));
    m.def("delta_poly", [](unsigned n) {
        return coeff_strings(delta_poly(n).to_poly().value());
    }, py::arg("n"));

    m.def("verify_gf", [](unsigned mm, unsigned order) {
        return to_json(verify_gf(mm, order)).dump();
    }, py::arg("m"), py::arg("order") = default_order);
    m.def("verify_shifted_gf", [](unsigned mm, unsigned ell, unsigned order) {
        return to_json(verify_shifted_gf(mm, ell, order)).dump();
    }, py::arg("m"), py::arg("ell"), py::arg("order") = default_order);
    m.def("verify_operational_expansion", [](unsigned mm, unsigned p) {
        return to_json(verify_operational_expansion(mm, p)).dump();
    }, py::arg("m"), py::arg("p"));
    m.def("verify_laguerre_link", [](unsigned n, bool as_printed) {
        return to_json(verify_laguerre_link(n, form_of(as_printed))).dump();
    }, py::arg("n"), py::arg("as_printed") = false);
    m.def("verify_bessel_link", [](unsigned n, unsigned order, bool as_printed) {
        return to_json(verify_bessel_link(n, order, form_of(as_printed))).dump();
    }, py::arg("n"), py::arg("order"), py::arg("as_printed") = false);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
