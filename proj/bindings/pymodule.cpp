#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "zetacensus/census.hpp"
#include "zetacensus/checks.hpp"
#include "zetacensus/gammafn.hpp"
#include "zetacensus/parallel.hpp"
#include "zetacensus/pseudo_gamma.hpp"
#include "zetacensus/xi.hpp"
#include "zetacensus/zeta.hpp"

namespace py = pybind11;
using namespace zetacensus;

namespace {

py::object opt_float(double v) {
    if (std::isnan(v))
        return py::none();
    return py::float_(v);
}

py::dict report_to_dict(const CheckReport& r) {
    py::dict params;
    for (const auto& kv : r.params)
        params[py::str(kv.first)] = kv.second;
    py::dict d;
    d["check_id"] = r.check_id;
    d["params"] = params;
    d["n_samples"] = r.n_samples;
    d["max_residual"] = r.max_residual;
    d["bound_value"] = opt_float(r.bound_value);
    d["fitted_constant"] = opt_float(r.fitted_constant);
    d["pass"] = r.pass;
    return d;
}

} // namespace

PYBIND11_MODULE(_zetacensus, m) {
    m.doc() = "zeta zero census core";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("zeta", [](Cplx s) { return zeta(s); }, py::arg("s"));
    m.def("zeta_logderiv", [](Cplx s) { return zeta_logderiv(s); }, py::arg("s"));
    m.def("xi", [](Cplx s) { return xi(s); }, py::arg("s"));
    m.def("xi_logderiv", [](Cplx s) { return xi_logderiv(s); }, py::arg("s"));
    m.def("gamma", [](Cplx s) { return gamma_fn(s); }, py::arg("s"));
    m.def("loggamma", [](Cplx s) { return log_gamma(s); }, py::arg("s"));
    m.def("digamma", [](Cplx s) { return digamma(s); }, py::arg("s"));
    m.def("binet_g", [](Cplx s) { return binet_g(s); }, py::arg("s"));

    m.def(
        "nabla",
        [](Cplx s, double Y) {
            const PseudoGammaParams p(Y);
            return nabla(s, p);
        },
        py::arg("s"), py::arg("Y"));
    m.def(
        "ratio_B",
        [](Cplx s, double Y) {
            const PseudoGammaParams p(Y);
            return ratio_B(s, p);
        },
        py::arg("s"), py::arg("Y"));

    m.def(
        "census",
        [](double T) {
            py::list out;
            for (const auto& z : locate_critical_zeros(T))
                out.append(py::make_tuple(z.gamma, z.bracket_lo, z.bracket_hi, z.residual));
            return out;
        },
        py::arg("T"), "zeros on the critical line up to T as (gamma, lo, hi, residual)");
    m.def("count", [](double T) { return count_zeros_NT(T); }, py::arg("T"));
    m.def("main_term", [](double T) { return rvm_main_term(T); }, py::arg("T"));
    m.def("min_zero_gap", [](double T) { return min_zero_gap(T); }, py::arg("T"));
    m.def(
        "density",
        [](double lam, double T) {
            const DensityCount d = density_breakdown(lam, T);
            py::dict out;
            out["total"] = d.total;
            out["off_line"] = d.off_line;
            out["X"] = d.X;
            out["Y"] = d.Y;
            out["epsilon"] = d.epsilon;
            out["windows"] = d.off_line_windows;
            return out;
        },
        py::arg("lam"), py::arg("T"));

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name) {
            py::list out;
            for (const auto& r : run_suite(name))
                out.append(report_to_dict(r));
            return out;
        },
        py::arg("name"));
    m.def(
        "dj_decomposition",
        [](double lam, double T) {
            const DjBreakdown d = dj_decomposition(lam, T);
            py::dict out;
            out["lam"] = d.lambda;
            out["T"] = d.T;
            out["epsilon"] = d.epsilon;
            out["X"] = d.X;
            out["Y"] = d.Y;
            out["Y1"] = d.Y1;
            out["im_d"] = d.im_d;
            out["reconstructed_count"] = d.reconstructed_count;
            out["census_count"] = d.census_count;
            return out;
        },
        py::arg("lam"), py::arg("T"));

    m.def("set_thread_count", &set_thread_count, py::arg("n"));
}
