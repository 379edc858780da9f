// superosc - batch front end for synthesizing superoscillating product
// signals and analyzing them (spectra, zeros, dynamic range, bounds,
// additive comparison, reverse-engineered potentials, ground states).
//
// Every subcommand prints a single-line JSON summary on stdout and writes
// any requested CSV/JSON artifacts. Runs are fully deterministic. Exit
// codes: 0 success, 1 validation error, 2 numerical failure.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superosc/additive.hpp"
#include "superosc/constructors.hpp"
#include "superosc/dynamic_range.hpp"
#include "superosc/harmonics.hpp"
#include "superosc/quantum.hpp"
#include "superosc/sampling.hpp"
#include "superosc/spectrum.hpp"
#include "superosc/zeros.hpp"

namespace so = superosc;
using nlohmann::json;

namespace {

// Accepts "3.14", "pi", "2pi", "pi/3", "0.5pi", "2pi/5".
double parse_omega(const std::string& text) {
    const auto pos = text.find("pi");
    if (pos == std::string::npos) {
        try {
            return std::stod(text);
        } catch (const std::exception&) {
            throw so::ValidationError("cannot parse frequency \"" + text + "\"");
        }
    }
    double mult = 1.0, div = 1.0;
    const std::string pre = text.substr(0, pos);
    const std::string post = text.substr(pos + 2);
    try {
        if (!pre.empty()) mult = std::stod(pre);
        if (!post.empty()) {
            if (post.size() < 2 || post[0] != '/') throw std::invalid_argument(post);
            div = std::stod(post.substr(1));
        }
    } catch (const std::exception&) {
        throw so::ValidationError("cannot parse frequency \"" + text + "\"");
    }
    return mult * std::numbers::pi / div;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_omega(item));
    }
    if (out.empty()) throw so::ValidationError("empty numeric list \"" + text + "\"");
    return out;
}

// "lo:hi"
so::Region parse_region(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos)
        throw so::ValidationError("region must be lo:hi, got \"" + text + "\"");
    so::Region r;
    r.lo = parse_omega(text.substr(0, pos));
    r.hi = parse_omega(text.substr(pos + 1));
    if (!(r.hi > r.lo)) throw so::ValidationError("region must have hi > lo");
    return r;
}

so::Family parse_family(const std::string& name) {
    if (name == "sine-translate") return so::Family::sine_translate;
    if (name == "sine-antisymmetric") return so::Family::sine_antisymmetric;
    if (name == "sinc-translate") return so::Family::sinc_translate;
    if (name == "sinc-varied") return so::Family::sinc_varied;
    throw so::ValidationError("unknown family \"" + name + "\"");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw so::ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw so::ValidationError("cannot write " + path);
    out << content;
}

so::ProductSignalSpec load_spec(const std::string& path) {
    return so::product_from_json_string(slurp(path));
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct CommonArgs {
    std::string spec_path, out_path;
};

int cmd_synth(const std::string& family_name, const std::string& omega_text, int count,
              const std::string& eps_text, const std::string& local_omega_text,
              const std::string& out_path) {
    so::SuperoscillationRequest req;
    req.family = parse_family(family_name);
    if (req.family == so::Family::sinc_varied) {
        req.eps = parse_list(omega_text);  // bandlimit list for this family
        req.omega_total = 0.0;
        req.count = static_cast<int>(req.eps.size());
    } else {
        req.omega_total = parse_omega(omega_text);
        req.count = count;
        if (!eps_text.empty() && !local_omega_text.empty())
            throw so::ValidationError("--eps and --local-omega are mutually exclusive");
        if (!eps_text.empty())
            req.eps = parse_list(eps_text);
        else if (!local_omega_text.empty())
            req.local_omega = parse_omega(local_omega_text);
        else
            throw so::ValidationError("synth needs --eps or --local-omega");
    }
    const auto spec = so::build(req);
    const std::string doc = so::to_json_string(spec);
    if (!out_path.empty()) spit(out_path, doc + "\n");
    json summary{{"status", "ok"},
                 {"omega_total", spec.omega_total},
                 {"factors", spec.factors.size()}};
    if (!out_path.empty()) summary["out"] = out_path;
    else summary["spec"] = json::parse(doc);
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_spectrum(const std::string& spec_path, double tol, const std::string& period_text,
                 const std::string& window_text, const std::string& out_path) {
    const auto spec = load_spec(spec_path);
    so::BandlimitCheckOptions opt;
    if (!window_text.empty()) opt.window_halfwidth = parse_omega(window_text);
    so::SpectrumReport rep;
    if (!period_text.empty()) {
        const double T = parse_omega(period_text);
        const auto h = so::expand_to_harmonics(spec);
        const double k_needed =
            so::max_harmonic_index(h) * std::max(1.0, T / so::period(h));
        std::size_t n = 64;
        while (n < 4.0 * k_needed + 8.0) n <<= 1;
        const auto s = so::sample_uniform(spec, 0.0, T / static_cast<double>(n), n);
        rep = so::periodic_spectrum(s, T, spec.omega_total);
        rep.tol = tol;
        rep.pass = rep.out_band_fraction() <= tol;
    } else {
        rep = so::verify_bandlimit(spec, tol, opt);
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw so::ValidationError("cannot write " + out_path);
        so::write_csv(out, rep);
    }
    json summary{{"status", rep.pass ? "pass" : "fail"},
                 {"in_band_energy", rep.in_band_energy},
                 {"leakage_energy", rep.leakage_energy},
                 {"out_band_energy", rep.out_band_energy},
                 {"total_energy", rep.total_energy},
                 {"out_band_fraction", rep.out_band_fraction()},
                 {"omega", rep.omega_declared},
                 {"tol", tol}};
    if (!out_path.empty()) summary["out"] = out_path;
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_zeros(const std::string& spec_path, const std::string& range_text, double scan_dt,
              double tol, const std::string& out_path) {
    const auto spec = load_spec(spec_path);
    const auto range = parse_region(range_text);
    if (scan_dt <= 0.0) scan_dt = range.width() / 4096.0;
    const auto zs = so::find_zeros(spec, range.lo, range.hi, scan_dt, tol);
    json doc{{"zeros", zs.zeros}, {"touch_candidates", zs.touch_candidates}, {"tol", zs.tol}};
    if (!out_path.empty()) spit(out_path, doc.dump() + "\n");
    json summary{{"status", "ok"}, {"count", zs.zeros.size()},
                 {"touch_candidates", zs.touch_candidates.size()}};
    if (!out_path.empty()) summary["out"] = out_path;
    else summary["zeros"] = zs.zeros;
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_dynrange(const std::string& spec_path, const std::string& region_text,
                 const std::string& out_path) {
    const auto spec = load_spec(spec_path);
    const so::Region region =
        region_text == "auto" ? so::default_superosc_region(spec) : parse_region(region_text);
    const auto rep = so::dynamic_range(spec, region);
    json doc{{"sigma", rep.sigma},
             {"global_max_abs", rep.global_max_abs},
             {"superosc_max_abs", rep.superosc_max_abs},
             {"region", {rep.region.lo, rep.region.hi}},
             {"region_covers_max", rep.region_covers_max}};
    if (!out_path.empty()) spit(out_path, doc.dump() + "\n");
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_bounds(const std::string& family_name, int count, double eps) {
    const auto family = parse_family(family_name);
    // the bound analysis is pinned to the Omega = pi setting
    const auto b = so::sigma_bounds(family, count, eps, std::numbers::pi);
    json doc{{"lower", b.lower}, {"upper", b.upper}, {"family", family_name},
             {"n", count}, {"eps", eps}, {"omega", std::numbers::pi}};
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_compare(const std::string& spec_path, const std::string& region_text, int precision_bits) {
    const auto spec = load_spec(spec_path);
    const so::Region region =
        region_text == "auto" ? so::default_superosc_region(spec) : parse_region(region_text);
    const auto mult = so::dynamic_range(spec, region);

    // matched additive reconstruction: the prescribed zeros inside the
    // region become zero constraints, and the multiplicative lobe maximum
    // pins the amplitude scale
    const double gap = region.width();
    const auto zs = so::find_zeros(spec, region.lo, region.hi, gap / 8192.0, 1e-12);
    if (zs.zeros.empty()) throw so::NumericalError("no zeros inside the comparison region");

    // lobe point: global maximum location of the multiplicative signal
    const bool periodic = std::all_of(spec.factors.begin(), spec.factors.end(),
                                      [](const so::FactorSpec& f) { return f.kind == so::FactorKind::sine; });
    so::KernelSpec kernel;
    double lobe_t = 0.0;
    if (periodic) {
        const auto h = so::expand_to_harmonics(spec);
        const double T = so::period(h);
        kernel.kind = so::KernelKind::dirichlet;
        kernel.period = T;
        kernel.order = static_cast<int>(std::llround(spec.omega_total * T / (2.0 * std::numbers::pi)));
        // lobe: quarter factor period past the last prescribed zero
        lobe_t = so::prescribed_zeros(spec).back() + 0.25 * T;
    } else {
        kernel.kind = so::KernelKind::sinc;
        kernel.omega = spec.omega_total;
        lobe_t = 0.0;  // sinc translates peak at the shift centroid
        for (const auto& f : spec.factors) lobe_t += f.eps;
        lobe_t /= static_cast<double>(spec.factors.size());
    }

    std::vector<so::Constraint> constraints;
    for (double z : zs.zeros) constraints.push_back({z, 0.0});
    constraints.push_back({lobe_t, so::eval_product(spec, lobe_t)});
    const auto sol =
        so::min_energy_interpolant(so::make_constraints(constraints), kernel, precision_bits);

    // sigma of the additive interpolant over the same domain rule
    auto abs_f = [&](double t) { return std::abs(so::eval_interpolant(sol, t)); };
    double add_global = 0.0, add_region = 0.0;
    double dom_lo, dom_hi;
    if (periodic) {
        const double c = 0.5 * (region.lo + region.hi);
        dom_lo = c - 0.5 * kernel.period;
        dom_hi = c + 0.5 * kernel.period;
    } else {
        const double reach = std::max(std::abs(region.lo), std::abs(region.hi));
        dom_lo = -4.0 * reach - 10.0;
        dom_hi = 4.0 * reach + 10.0;
    }
    const std::size_t n_scan = 1u << 18;
    for (std::size_t i = 0; i <= n_scan; ++i) {
        const double t = dom_lo + (dom_hi - dom_lo) * static_cast<double>(i) / n_scan;
        const double v = abs_f(t);
        add_global = std::max(add_global, v);
        if (t >= region.lo && t <= region.hi) add_region = std::max(add_region, v);
    }
    if (add_region == 0.0) throw so::NumericalError("additive interpolant vanished on the region");
    const double sigma_add = add_global / add_region;

    json doc{{"sigma_multiplicative", mult.sigma},
             {"sigma_additive", sigma_add},
             {"ratio", mult.sigma / sigma_add},
             {"kernel", kernel.kind == so::KernelKind::sinc ? "sinc" : "dirichlet"},
             {"cond", sol.cond},
             {"residual", sol.residual},
             {"precision_bits", sol.precision_bits},
             {"region", {region.lo, region.hi}}};
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_potential(const std::string& spec_path, const std::string& lift_text, int grid_n,
                  const std::string& out_path) {
    const auto spec = load_spec(spec_path);
    const auto psi = so::expand_to_harmonics(spec);
    double lift;
    if (lift_text == "auto-critical") {
        // default sufficient margin: 1e-3 of the wave function's range
        const auto bracket = so::critical_lift(psi);
        lift = bracket.positive + 1e-3 * (bracket.positive - bracket.negative);
    } else {
        lift = parse_omega(lift_text);
    }
    const auto pot = so::build_potential(psi, lift, static_cast<std::size_t>(grid_n));
    if (!out_path.empty()) {
        if (ends_with(out_path, ".csv")) {
            std::ofstream out(out_path);
            if (!out) throw so::ValidationError("cannot write " + out_path);
            so::write_csv(out, pot);
        } else {
            spit(out_path, so::to_json_string(pot) + "\n");
        }
    }
    json summary{{"C", pot.lift},
                 {"n", pot.size()},
                 {"period", pot.period},
                 {"status", pot.status == so::PotentialStatus::ok
                                ? "ok"
                                : (pot.status == so::PotentialStatus::touching_critical
                                       ? "touching_critical"
                                       : "crossing_unphysical")},
                 {"singular_locations", pot.singular_locations}};
    if (!out_path.empty()) summary["out"] = out_path;
    if (!pot.clean()) {
        std::string msg = "crossing singularities: unphysical at x = {";
        for (std::size_t i = 0; i < pot.singular_locations.size(); ++i) {
            if (i) msg += ", ";
            msg += std::to_string(pot.singular_locations[i]);
        }
        msg += "}";
        summary["error"] = msg;
        std::cout << summary.dump() << "\n";
        std::cerr << msg << "\n";
        return 2;
    }
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_eigen(const std::string& potential_path, const std::string& out_path) {
    const auto pot = so::potential_from_json_string(slurp(potential_path));
    const auto rep = so::solve_ground_state(pot);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw so::ValidationError("cannot write " + out_path);
        so::write_csv(out, pot, rep);
    }
    std::cout << so::eigen_summary_json(pot, rep) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superoscillation synthesis and analysis"};
    app.require_subcommand(1);

    std::string family = "sine-translate", omega_text = "pi", eps_text, local_omega_text;
    std::string spec_path, out_path, period_text, window_text, region_text = "auto";
    std::string lift_text = "auto-critical", range_text, potential_path;
    int count = 3, grid_n = 1024, precision_bits = 256;
    double tol = 1e-10, scan_dt = 0.0, zero_tol = 1e-12, eps_val = 0.1;

    auto* synth = app.add_subcommand("synth", "build a product-signal spec");
    synth->add_option("--family", family, "sine-translate|sine-antisymmetric|sinc-translate|sinc-varied");
    synth->add_option("--omega", omega_text, "total bandlimit (or bandlimit list for sinc-varied)");
    synth->add_option("--n", count, "factor count");
    synth->add_option("--eps", eps_text, "comma-separated displacements");
    synth->add_option("--local-omega", local_omega_text, "target local frequency (spacing pi/omega)");
    synth->add_option("--out", out_path, "output spec JSON path");

    auto* spectrum = app.add_subcommand("spectrum", "spectral content and bandlimit check");
    spectrum->add_option("--spec", spec_path, "spec JSON")->required();
    spectrum->add_option("--period", period_text, "analyze exactly one period");
    spectrum->add_option("--window", window_text, "window halfwidth for sinc products");
    spectrum->add_option("--tol", tol, "out-of-band relative energy tolerance");
    spectrum->add_option("--out", out_path, "CSV output (omega,magnitude)");

    auto* zeros = app.add_subcommand("zeros", "zero extraction");
    zeros->add_option("--spec", spec_path, "spec JSON")->required();
    zeros->add_option("--range", range_text, "scan range lo:hi")->required();
    zeros->add_option("--scan-dt", scan_dt, "scan step (default range/4096)");
    zeros->add_option("--tol", zero_tol, "bisection tolerance");
    zeros->add_option("--out", out_path, "JSON output");

    auto* dynrange = app.add_subcommand("dynrange", "dynamic range sigma");
    dynrange->add_option("--spec", spec_path, "spec JSON")->required();
    dynrange->add_option("--region", region_text, "superoscillating region lo:hi or auto");
    dynrange->add_option("--out", out_path, "JSON output");

    auto* bounds = app.add_subcommand("bounds", "dynamic-range lower/upper bounds (Omega = pi)");
    bounds->add_option("--family", family, "sine-translate|sinc-translate");
    bounds->add_option("--n", count, "factor count");
    bounds->add_option("--eps", eps_val, "uniform zero spacing");

    auto* compare = app.add_subcommand("compare", "multiplicative vs additive dynamic range");
    compare->add_option("--spec", spec_path, "spec JSON")->required();
    compare->add_option("--region", region_text, "superoscillating region lo:hi or auto");
    compare->add_option("--precision-bits", precision_bits, "additive working precision");

    auto* potential = app.add_subcommand("potential", "reverse-engineered potential");
    potential->add_option("--spec", spec_path, "spec JSON (periodic sine product)")->required();
    potential->add_option("--lift", lift_text, "lift C, or auto-critical");
    potential->add_option("--grid", grid_n, "grid size over one period");
    potential->add_option("--out", out_path, "potential JSON (or CSV if *.csv)");

    auto* eigen = app.add_subcommand("eigen", "lowest eigenpair of the lifted potential");
    eigen->add_option("--potential", potential_path, "potential JSON from the potential subcommand")
        ->required();
    eigen->add_option("--out", out_path, "CSV output (x,psi_lifted,ground_vec)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (synth->parsed())
            return cmd_synth(family, omega_text, count, eps_text, local_omega_text, out_path);
        if (spectrum->parsed())
            return cmd_spectrum(spec_path, tol, period_text, window_text, out_path);
        if (zeros->parsed()) return cmd_zeros(spec_path, range_text, scan_dt, zero_tol, out_path);
        if (dynrange->parsed()) return cmd_dynrange(spec_path, region_text, out_path);
        if (bounds->parsed()) return cmd_bounds(family, count, eps_val);
        if (compare->parsed()) return cmd_compare(spec_path, region_text, precision_bits);
        if (potential->parsed()) return cmd_potential(spec_path, lift_text, grid_n, out_path);
        if (eigen->parsed()) return cmd_eigen(potential_path, out_path);
    } catch (const so::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const so::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
