// python bindings for the core library
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meinardus/asym.hpp"
#include "meinardus/coeffs.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/lspec.hpp"
#include "meinardus/saddle.hpp"
#include "meinardus/weight.hpp"
#include "meinardus/witten.hpp"

namespace py = pybind11;
using namespace meinardus;

namespace {

py::int_ to_pyint(const mpz_class& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeffs_py(const std::string& preset, std::size_t n_max) {
    CoeffTable t = coeffs_convolution(WeightFunction::parse(preset), n_max);
    py::list out;
    for (const auto& v : t.values) out.append(to_pyint(v));
    return out;
}

py::dict model_py(const std::string& preset) {
    AsymptoticModel m =
        preset_model(preset_lspec(WeightFunction::parse(preset)));
    py::list terms;
    for (const auto& [A, e] : m.exp_terms)
        terms.append(py::make_tuple(A, e.str(), e.to_double()));
    py::dict d;
    d["preset"] = m.preset;
    d["alpha"] = m.alpha;
    d["exp_terms"] = terms;
    d["C"] = m.C;
    d["b"] = m.b;
    d["next_error_exponent"] = m.next_error_exponent.str();
    if (m.b_exact_known) d["b_exact"] = m.b_exact.str();
    return d;
}

double evaluate_log_py(const std::string& preset, std::uint64_t n) {
    AsymptoticModel m =
        preset_model(preset_lspec(WeightFunction::parse(preset)));
    return evaluate(m, n).log_value;
}

py::dict zeta_result(const ZetaEval& e) {
    py::dict d;
    d["value"] = e.value;
    d["err_estimate"] = e.err_estimate;
    d["method"] = e.method == ZetaMethod::DirectSum ? "direct" : "mb";
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact and asymptotic coefficient machinery for weighted "
              "partition generating functions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_IOError);

    m.def("coeffs", &coeffs_py, py::arg("preset"), py::arg("n_max"),
          "exact coefficients p_f(0..n_max) as python integers");
    m.def("model", &model_py, py::arg("preset"),
          "asymptotic model constants for a preset");
    m.def("evaluate_log", &evaluate_log_py, py::arg("preset"), py::arg("n"),
          "log of the asymptotic approximation at n");
    m.def(
        "cauchy_count",
        [](const std::string& preset, std::uint64_t n) {
            CauchyResult r = cauchy_count(WeightFunction::parse(preset), n);
            py::dict d;
            d["nearest"] = to_pyint(r.nearest);
            d["delta"] = r.delta;
            d["err_estimate"] = r.err_estimate;
            return d;
        },
        py::arg("preset"), py::arg("n"));
    m.def(
        "saddle",
        [](const std::string& preset, std::uint64_t n) {
            SaddleResult r = solve_saddle(WeightFunction::parse(preset), n);
            py::dict d;
            d["n"] = r.n;
            d["rho"] = r.rho;
            d["rho_asym"] = r.rho_asym;
            d["residual"] = r.residual;
            return d;
        },
        py::arg("preset"), py::arg("n"));
    m.def(
        "zeta_so5",
        [](Cplx s, const std::string& method, double tol) {
            if (method == "direct") return zeta_result(zeta_so5_direct(s, tol));
            if (method == "mb")
                return zeta_result(zeta_so5_continued(s, 3, 0.5, tol));
            return zeta_result(s.real() > 0.75
                                   ? zeta_so5_direct(s, tol)
                                   : zeta_so5_continued(s, 3, 0.5, tol));
        },
        py::arg("s"), py::arg("method") = "auto", py::arg("tol") = 1e-8);
    m.def(
        "zeta_mt2",
        [](Cplx s1, Cplx s2, Cplx s3, double tol) {
            return zeta_result(zeta_mt2(s1, s2, s3, tol));
        },
        py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("tol") = 1e-10);
    m.def(
        "zeta_pk",
        [](Cplx s, int k, double tol) { return zeta_result(zeta_Pk(s, k, tol)); },
        py::arg("s"), py::arg("k"), py::arg("tol") = 1e-10);
}
