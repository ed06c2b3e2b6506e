#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nihoapn/closed_forms.hpp"
#include "nihoapn/errors.hpp"
#include "nihoapn/lemma_suite.hpp"
#include "nihoapn/niho.hpp"
#include "nihoapn/report.hpp"
#include "nihoapn/spectra.hpp"
#include "nihoapn/survey.hpp"
#include "nihoapn/version.hpp"

namespace py = pybind11;
using namespace nihoapn;

namespace {

std::string spectrum_report(int n, std::uint64_t d, std::optional<std::uint64_t> modulus,
                            unsigned jobs) {
    const PowerFunction f(make_field(n, modulus), d);
    const auto row = ddt_row(f, jobs);
    SpectrumReport r;
    r.n = n;
    r.modulus = f.field().modulus();
    r.d = f.exponent();
    r.diff = diff_spectrum_from_row(row);
    r.boom = boom_spectrum(f, jobs);
    r.locally_apn = is_locally_apn_row(row);
    r.permutation = is_permutation(f);
    return Json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Differential and boomerang spectra of power functions over GF(2^n)";
    m.attr("__version__") = kVersion;

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    py::class_<Field>(m, "Field")
        .def(py::init([](int n, std::optional<std::uint64_t> modulus) {
                 return make_field(n, modulus);
             }),
             py::arg("n"), py::arg("modulus") = py::none())
        .def_property_readonly("n", &Field::degree)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("size", &Field::size)
        .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) {
            return f.mul(f.element(a), f.element(b)).bits;
        })
        .def("pow", [](const Field& f, std::uint32_t a, std::uint64_t e) {
            return f.pow(f.element(a), e).bits;
        })
        .def("inv", [](const Field& f, std::uint32_t a) { return f.inv(f.element(a)).bits; })
        .def("trace", [](const Field& f, std::uint32_t a) { return f.trace_abs(f.element(a)); })
        .def("conjugate",
             [](const Field& f, std::uint32_t a) { return f.conjugate(f.element(a)).bits; })
        .def("in_unit_circle",
             [](const Field& f, std::uint32_t a) { return f.in_unit_circle(f.element(a)); })
        .def("polar_decompose", [](const Field& f, std::uint32_t a) {
            const Polar p = f.polar_decompose(f.element(a));
            return std::pair{p.u.bits, p.v.bits};
        });

    py::class_<NihoParams>(m, "NihoParams")
        .def_readonly("m", &NihoParams::m)
        .def_readonly("k", &NihoParams::k)
        .def_readonly("s", &NihoParams::s)
        .def_readonly("d", &NihoParams::d)
        .def("__repr__", [](const NihoParams& p) {
            return "NihoParams(m=" + std::to_string(p.m) + ", k=" + std::to_string(p.k) +
                   ", s=" + std::to_string(p.s) + ", d=" + std::to_string(p.d) + ")";
        });

    m.def("inv_mod", &inv_mod, py::arg("a"), py::arg("modulus"));
    m.def("build_niho", &build_niho, py::arg("m"), py::arg("k"));
    m.def("gcd_criterion", &gcd_criterion, py::arg("m"), py::arg("k"));
    m.def("exponent_orbit", &exponent_orbit, py::arg("s"), py::arg("m"));
    m.def("is_permutation_exponent", &is_permutation_exponent, py::arg("params"));

    m.def(
        "ddt_row",
        [](int n, std::uint64_t d, std::optional<std::uint64_t> modulus, unsigned jobs) {
            return ddt_row(PowerFunction(make_field(n, modulus), d), jobs);
        },
        py::arg("n"), py::arg("d"), py::arg("modulus") = py::none(), py::arg("jobs") = 1);
    m.def(
        "bct_row",
        [](int n, std::uint64_t d, std::optional<std::uint64_t> modulus, unsigned jobs) {
            return bct_fiber(PowerFunction(make_field(n, modulus), d), jobs);
        },
        py::arg("n"), py::arg("d"), py::arg("modulus") = py::none(), py::arg("jobs") = 1);

    py::call_guard<py::gil_scoped_release> nogil;
    m.def("_spectrum_json", &spectrum_report, py::arg("n"), py::arg("d"),
          py::arg("modulus") = py::none(), py::arg("jobs") = 1, nogil);
    m.def(
        "_verify_json",
        [](int m_, int k, unsigned jobs) { return Json(verify_theorems(m_, k, jobs)).dump(); },
        py::arg("m"), py::arg("k"), py::arg("jobs") = 1, nogil);
    m.def(
        "_survey_json",
        [](int m_, unsigned jobs, bool shifts) {
            return Json(survey_niho(m_, SurveyOptions{jobs, shifts})).dump();
        },
        py::arg("m"), py::arg("jobs") = 1, py::arg("cyclotomic_shifts") = false, nogil);
    m.def(
        "_lemmas_json",
        [](std::uint64_t seed, std::uint64_t samples, const std::vector<std::string>& only) {
            LemmaSuiteOptions o;
            o.seed = seed;
            o.samples = samples;
            for (const auto& name : only) {
                const auto id = parse_lemma_id(name);
                if (!id) throw ParamError("usage", "unknown lemma selector '" + name + "'");
                o.only.insert(*id);
            }
            return Json(run_lemma_suite(o)).dump();
        },
        py::arg("seed") = 1, py::arg("samples") = 10000,
        py::arg("only") = std::vector<std::string>{}, nogil);
}
