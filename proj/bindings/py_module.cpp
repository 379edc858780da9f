// Python bindings for the core operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superosc/additive.hpp"
#include "superosc/constructors.hpp"
#include "superosc/dynamic_range.hpp"
#include "superosc/harmonics.hpp"
#include "superosc/quantum.hpp"
#include "superosc/sampling.hpp"
#include "superosc/spectrum.hpp"
#include "superosc/zeros.hpp"

namespace py = pybind11;
using namespace superosc;

PYBIND11_MODULE(_superosc, m) {
    m.doc() = "superoscillation synthesis and analysis";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::enum_<FactorKind>(m, "FactorKind")
        .value("sine", FactorKind::sine)
        .value("sinc", FactorKind::sinc);

    py::class_<FactorSpec>(m, "FactorSpec")
        .def(py::init([](FactorKind kind, double omega, double eps, int sign) {
                 return FactorSpec{kind, omega, eps, sign};
             }),
             py::arg("kind"), py::arg("omega"), py::arg("eps") = 0.0, py::arg("sign") = 1)
        .def_readonly("kind", &FactorSpec::kind)
        .def_readonly("omega", &FactorSpec::omega)
        .def_readonly("eps", &FactorSpec::eps)
        .def_readonly("sign", &FactorSpec::sign);

    py::class_<ProductSignalSpec>(m, "ProductSignalSpec")
        .def(py::init(&make_product), py::arg("factors"))
        .def_readonly("factors", &ProductSignalSpec::factors)
        .def_readonly("omega_total", &ProductSignalSpec::omega_total)
        .def("to_json", [](const ProductSignalSpec& s) { return to_json_string(s); })
        .def_static("from_json", &product_from_json_string);

    m.def("eval_factor", &eval_factor, py::arg("factor"), py::arg("t"));
    m.def("eval_product", &eval_product, py::arg("spec"), py::arg("t"));
    m.def("product_bandlimit", &product_bandlimit);

    py::class_<HarmonicTerm>(m, "HarmonicTerm")
        .def_readonly("k", &HarmonicTerm::k)
        .def_readonly("cos_coef", &HarmonicTerm::cos_coef)
        .def_readonly("sin_coef", &HarmonicTerm::sin_coef);

    py::class_<HarmonicSum>(m, "HarmonicSum")
        .def_readonly("omega0", &HarmonicSum::omega0)
        .def_readonly("terms", &HarmonicSum::terms)
        .def("__call__", [](const HarmonicSum& h, double t) { return eval(h, t); });

    m.def("expand_to_harmonics", &expand_to_harmonics);
    m.def("harmonic_eval", [](const HarmonicSum& h, double t) { return eval(h, t); });
    m.def("harmonic_derivative", &derivative, py::arg("h"), py::arg("order"));
    m.def("max_harmonic_index", &max_harmonic_index);
    m.def("harmonic_period", &period);

    py::enum_<Family>(m, "Family")
        .value("sine_translate", Family::sine_translate)
        .value("sine_antisymmetric", Family::sine_antisymmetric)
        .value("sinc_translate", Family::sinc_translate)
        .value("sinc_varied", Family::sinc_varied);

    m.def("build_periodic_translates", &build_periodic_translates, py::arg("omega_total"),
          py::arg("n_factors"), py::arg("eps"));
    m.def("build_periodic_antisymmetric", &build_periodic_antisymmetric, py::arg("omega_total"),
          py::arg("n_factors"), py::arg("eps_half"), py::arg("squared") = false);
    m.def("build_sinc_translates", &build_sinc_translates, py::arg("omega_total"),
          py::arg("n_factors"), py::arg("eps"));
    m.def("build_varied_bandwidth", &build_varied_bandwidth, py::arg("omegas"));
    m.def("epsilons_from_frequency", &epsilons_from_frequency, py::arg("omega_local"),
          py::arg("count"));
    m.def("centered_shifts", &centered_shifts, py::arg("n"), py::arg("eps"));

    py::class_<SampledSignal>(m, "SampledSignal")
        .def_readonly("t0", &SampledSignal::t0)
        .def_readonly("dt", &SampledSignal::dt)
        .def_readonly("values", &SampledSignal::values);
    m.def("sample_uniform", &sample_uniform, py::arg("spec"), py::arg("t0"), py::arg("dt"),
          py::arg("n"));

    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("frequencies", &SpectrumReport::frequencies)
        .def_readonly("magnitudes", &SpectrumReport::magnitudes)
        .def_readonly("omega_declared", &SpectrumReport::omega_declared)
        .def_readonly("in_band_energy", &SpectrumReport::in_band_energy)
        .def_readonly("leakage_energy", &SpectrumReport::leakage_energy)
        .def_readonly("out_band_energy", &SpectrumReport::out_band_energy)
        .def_readonly("total_energy", &SpectrumReport::total_energy)
        .def_readonly("pass_", &SpectrumReport::pass)
        .def("out_band_fraction", &SpectrumReport::out_band_fraction);
    m.def("periodic_spectrum", &periodic_spectrum, py::arg("signal"), py::arg("period"),
          py::arg("omega_declared") = 0.0);
    m.def(
        "verify_bandlimit",
        [](const ProductSignalSpec& spec, double tol, double window_halfwidth,
           double taper_length, std::size_t samples, double guard) {
            BandlimitCheckOptions opt;
            opt.window_halfwidth = window_halfwidth;
            opt.taper_length = taper_length;
            opt.samples = samples;
            opt.guard = guard;
            return verify_bandlimit(spec, tol, opt);
        },
        py::arg("spec"), py::arg("tol"), py::arg("window_halfwidth") = 200.0,
        py::arg("taper_length") = 20.0, py::arg("samples") = std::size_t(1) << 15,
        py::arg("guard") = 0.2);
    m.def("analytic_sinc_spectrum", &analytic_sinc_spectrum, py::arg("spec"),
          py::arg("omega_grid"));

    py::class_<ZeroSet>(m, "ZeroSet")
        .def_readonly("zeros", &ZeroSet::zeros)
        .def_readonly("touch_candidates", &ZeroSet::touch_candidates)
        .def_readonly("tol", &ZeroSet::tol);
    m.def("find_zeros", &find_zeros, py::arg("spec"), py::arg("t_lo"), py::arg("t_hi"),
          py::arg("scan_dt"), py::arg("tol") = 1e-12);
    py::class_<LocalFrequency>(m, "LocalFrequency")
        .def_readonly("midpoint", &LocalFrequency::midpoint)
        .def_readonly("omega", &LocalFrequency::omega);
    m.def("local_frequencies", &local_frequencies);
    m.def("prescribed_zeros", &prescribed_zeros);

    py::class_<Region>(m, "Region")
        .def(py::init([](double lo, double hi) { return Region{lo, hi}; }), py::arg("lo"),
             py::arg("hi"))
        .def_readonly("lo", &Region::lo)
        .def_readonly("hi", &Region::hi);
    py::class_<DynamicRangeReport>(m, "DynamicRangeReport")
        .def_readonly("sigma", &DynamicRangeReport::sigma)
        .def_readonly("global_max_abs", &DynamicRangeReport::global_max_abs)
        .def_readonly("superosc_max_abs", &DynamicRangeReport::superosc_max_abs)
        .def_readonly("region_covers_max", &DynamicRangeReport::region_covers_max);
    m.def("default_superosc_region", &default_superosc_region);
    m.def("dynamic_range", &dynamic_range, py::arg("spec"), py::arg("region"),
          py::arg("initial_dt") = 0.0);
    py::class_<SigmaBounds>(m, "SigmaBounds")
        .def_readonly("lower", &SigmaBounds::lower)
        .def_readonly("upper", &SigmaBounds::upper);
    m.def("sigma_bounds", &sigma_bounds, py::arg("family"), py::arg("n_factors"), py::arg("eps"),
          py::arg("omega_total"));

    py::enum_<KernelKind>(m, "KernelKind")
        .value("sinc", KernelKind::sinc)
        .value("dirichlet", KernelKind::dirichlet);
    py::class_<KernelSpec>(m, "KernelSpec")
        .def(py::init([](KernelKind kind, double omega, int order, double period) {
                 KernelSpec k;
                 k.kind = kind;
                 k.omega = omega;
                 k.order = order;
                 k.period = period;
                 return k;
             }),
             py::arg("kind"), py::arg("omega") = 1.0, py::arg("order") = 0,
             py::arg("period") = 6.283185307179586)
        .def_readonly("kind", &KernelSpec::kind);
    py::class_<AdditiveSolution>(m, "AdditiveSolution")
        .def_readonly("coeffs", &AdditiveSolution::coeffs)
        .def_readonly("points", &AdditiveSolution::points)
        .def_readonly("cond", &AdditiveSolution::cond)
        .def_readonly("residual", &AdditiveSolution::residual)
        .def_readonly("precision_bits", &AdditiveSolution::precision_bits)
        .def("to_json", [](const AdditiveSolution& s) { return to_json_string(s); });
    m.def("dirichlet_kernel", &dirichlet_kernel, py::arg("order"), py::arg("t"));
    m.def(
        "min_energy_interpolant",
        [](const std::vector<std::pair<double, double>>& pts, const KernelSpec& kernel,
           int precision_bits) {
            std::vector<Constraint> cs;
            cs.reserve(pts.size());
            for (auto [t, a] : pts) cs.push_back({t, a});
            return min_energy_interpolant(make_constraints(std::move(cs)), kernel, precision_bits);
        },
        py::arg("points"), py::arg("kernel"), py::arg("precision_bits") = 53);
    m.def("eval_interpolant", &eval_interpolant, py::arg("solution"), py::arg("t"));

    py::class_<LiftBracket>(m, "LiftBracket")
        .def_readonly("positive", &LiftBracket::positive)
        .def_readonly("negative", &LiftBracket::negative);
    m.def("critical_lift", &critical_lift, py::arg("psi"),
          py::arg("resolution") = std::size_t(1) << 17);
    m.def("second_derivative", &second_derivative);

    py::enum_<PotentialStatus>(m, "PotentialStatus")
        .value("ok", PotentialStatus::ok)
        .value("touching_critical", PotentialStatus::touching_critical)
        .value("crossing_unphysical", PotentialStatus::crossing_unphysical);
    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def_readonly("lift", &PotentialSpec::lift)
        .def_readonly("period", &PotentialSpec::period)
        .def_readonly("x", &PotentialSpec::x)
        .def_readonly("V", &PotentialSpec::V)
        .def_readonly("psi_lifted", &PotentialSpec::psi_lifted)
        .def_readonly("singular", &PotentialSpec::singular)
        .def_readonly("status", &PotentialSpec::status)
        .def_readonly("singular_locations", &PotentialSpec::singular_locations)
        .def("clean", &PotentialSpec::clean)
        .def("to_json", [](const PotentialSpec& p) { return to_json_string(p); })
        .def_static("from_json", &potential_from_json_string);
    m.def("build_potential", &build_potential, py::arg("psi"), py::arg("lift"), py::arg("grid_n"));

    py::class_<EigenReport>(m, "EigenReport")
        .def_readonly("E0", &EigenReport::E0)
        .def_readonly("ground", &EigenReport::ground)
        .def_readonly("node_count", &EigenReport::node_count)
        .def_readonly("overlap", &EigenReport::overlap)
        .def_readonly("n", &EigenReport::n)
        .def_readonly("residual", &EigenReport::residual)
        .def_readonly("iterations", &EigenReport::iterations);
    m.def("solve_ground_state", &solve_ground_state);

    py::class_<OscillationReport>(m, "OscillationReport")
        .def_readonly("extrema_inside", &OscillationReport::extrema_inside)
        .def_readonly("extrema_outside", &OscillationReport::extrema_outside)
        .def_readonly("density_inside", &OscillationReport::density_inside)
        .def_readonly("density_outside", &OscillationReport::density_outside)
        .def_readonly("ratio", &OscillationReport::ratio);
    m.def("potential_oscillation_report", &potential_oscillation_report, py::arg("potential"),
          py::arg("region"), py::arg("scan_n") = std::size_t(1) << 14);
}
