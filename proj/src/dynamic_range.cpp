#include "superosc/dynamic_range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "superosc/harmonics.hpp"
#include "superosc/zeros.hpp"

namespace superosc {

namespace {

constexpr double kPi = std::numbers::pi;

// Parabolic ascent on S^2 from a bracketing triple; returns max |S|.
double refine_abs_max(const ProductSignalSpec& spec, double t, double h, double lo, double hi) {
    auto sq = [&](double x) {
        const double v = eval_product(spec, x);
        return v * v;
    };
    for (int it = 0; it < 90 && h > 1e-16 * std::max(1.0, std::abs(t)); ++it) {
        const double f0 = sq(t - h), f1 = sq(t), f2 = sq(t + h);
        const double denom = f0 - 2.0 * f1 + f2;
        double tv = t;
        if (denom < 0.0) tv = t + 0.5 * h * (f0 - f2) / denom;
        tv = std::clamp(tv, std::max(t - h, lo), std::min(t + h, hi));
        t = tv;
        h *= 0.5;
    }
    return std::abs(eval_product(spec, t));
}

struct ScanMax {
    double t = 0.0;
    double value = 0.0;
};

// Scan + refinement of the top local maxima of |S| on [lo, hi].
ScanMax scan_abs_max(const ProductSignalSpec& spec, double lo, double hi, double dt) {
    const auto n = std::clamp<std::size_t>(static_cast<std::size_t>((hi - lo) / dt) + 2, 8,
                                           std::size_t(1) << 24);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = std::abs(eval_product(spec, lo + static_cast<double>(i) * step));

    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        const bool up = i == 0 || vals[i] >= vals[i - 1];
        const bool down = i + 1 == n || vals[i] >= vals[i + 1];
        if (up && down) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    if (peaks.size() > 8) peaks.resize(8);

    ScanMax best;
    for (std::size_t i : peaks) {
        const double t = lo + static_cast<double>(i) * step;
        const double v = refine_abs_max(spec, t, step, lo, hi);
        if (v > best.value) best = {t, v};
    }
    return best;
}

bool has_sinc(const ProductSignalSpec& spec) {
    return std::any_of(spec.factors.begin(), spec.factors.end(),
                       [](const FactorSpec& f) { return f.kind == FactorKind::sinc; });
}

// |S(t)| <= prod over sinc factors of min(1, 1/|omega (t - eps)|).
double sinc_envelope(const ProductSignalSpec& spec, double t) {
    double env = 1.0;
    for (const auto& f : spec.factors) {
        if (f.kind != FactorKind::sinc) continue;
        const double x = std::abs(f.omega * (t - f.eps));
        if (x > 1.0) env /= x;
    }
    return env;
}

}  // namespace

Region default_superosc_region(const ProductSignalSpec& spec) {
    const auto zs = prescribed_zeros(spec);
    double gap = kPi / product_bandlimit(spec);
    if (zs.size() >= 2) {
        gap = zs[1] - zs[0];
        for (std::size_t i = 1; i + 1 < zs.size(); ++i) gap = std::min(gap, zs[i + 1] - zs[i]);
        gap = std::max(gap, 0.0);
    }
    if (gap == 0.0) gap = kPi / product_bandlimit(spec);
    return Region{zs.front() - 0.5 * gap, zs.back() + 0.5 * gap};
}

DynamicRangeReport dynamic_range(const ProductSignalSpec& spec, const Region& region,
                                 double initial_dt) {
    if (!(region.width() > 0.0)) throw ValidationError("superoscillating region is empty");

    // analysis domain: one period for periodic specs, otherwise a window
    // wide enough that the decaying envelope rules out larger lobes outside
    double dom_lo, dom_hi;
    bool periodic = false;
    if (!has_sinc(spec)) {
        try {
            const HarmonicSum h = expand_to_harmonics(spec);
            const double T = period(h);
            if (region.width() > T)
                throw ValidationError("region wider than one period");
            const double c = 0.5 * (region.lo + region.hi);
            dom_lo = c - 0.5 * T;
            dom_hi = c + 0.5 * T;
            periodic = true;
        } catch (const IncommensurateError&) {
            periodic = false;
        }
    }
    if (!periodic) {
        double reach = std::max(std::abs(region.lo), std::abs(region.hi));
        for (const auto& f : spec.factors)
            reach = std::max(reach, std::abs(f.eps) + 8.0 * kPi / f.omega);
        dom_lo = -reach;
        dom_hi = reach;
    }

    const double fastest = kPi / product_bandlimit(spec);
    double dt_global = initial_dt > 0.0 ? initial_dt : fastest / 16.0;
    double dt_region = std::min(dt_global, region.width() / 4096.0);

    DynamicRangeReport rep;
    rep.region = region;
    double prev_sigma = -1.0;
    for (int round = 0; round < 7; ++round) {
        ScanMax gm = scan_abs_max(spec, dom_lo, dom_hi, dt_global);
        if (!periodic && has_sinc(spec)) {
            // grow the window until the decaying envelope at its edge
            // cannot hide a larger lobe (pure-sine incommensurate specs
            // have no decay; their window stays at the initial reach)
            while ((sinc_envelope(spec, dom_hi) > 0.5 * gm.value ||
                    sinc_envelope(spec, dom_lo) > 0.5 * gm.value) &&
                   dom_hi - dom_lo < 1e6) {
                dom_lo *= 2.0;
                dom_hi *= 2.0;
                gm = scan_abs_max(spec, dom_lo, dom_hi, dt_global);
            }
        }
        const ScanMax rm = scan_abs_max(spec, region.lo, region.hi, dt_region);
        rep.global_max_abs = std::max(gm.value, rm.value);
        rep.superosc_max_abs = rm.value;
        rep.region_covers_max =
            (gm.t >= region.lo && gm.t <= region.hi) || rm.value >= gm.value * (1.0 - 1e-12);
        rep.sigma = rep.region_covers_max ? 1.0 : gm.value / rm.value;
        if (prev_sigma > 0.0 && std::abs(rep.sigma - prev_sigma) <= 1e-6 * rep.sigma) break;
        prev_sigma = rep.sigma;
        dt_global *= 0.5;
        dt_region *= 0.5;
    }
    return rep;
}

SigmaBounds sigma_bounds(Family family, int n_factors, double eps, double omega_total) {
    if (family != Family::sine_translate && family != Family::sinc_translate)
        throw ValidationError("bounds are defined for the translate families");
    if (n_factors < 2) throw ValidationError("bounds need at least two factors");
    if (!(eps > 0.0) || !(omega_total > 0.0))
        throw ValidationError("spacing and bandlimit must be positive");

    const bool sine = family == Family::sine_translate;
    const double w = omega_total / n_factors;
    const auto shifts = centered_shifts(n_factors, eps);
    const double cluster = sine ? 0.0 : n_factors * kPi / omega_total;
    const double reg_lo = cluster - 0.5 * n_factors * eps;
    const double reg_hi = cluster + 0.5 * n_factors * eps;
    const double lobe_t = sine ? n_factors * kPi / (2.0 * omega_total) : 0.0;
    const double mid =
        cluster + (n_factors % 2 == 1 ? 0.5 * eps : 0.0);

    if (sine && reg_hi >= lobe_t)
        throw NumericalError("bound regime invalid: region reaches the lobe point");
    if (!sine && reg_lo <= 0.5 * cluster)
        throw NumericalError("bound regime invalid: cluster region reaches the central lobe");

    auto factor_at = [&](double s, double t) {
        FactorSpec f{sine ? FactorKind::sine : FactorKind::sinc, w, s, +1};
        return std::abs(eval_factor(f, t));
    };
    auto factor_max_region = [&](double s) {
        if (sine) {
            const double a = w * (reg_lo - s), b = w * (reg_hi - s);
            // 1 if [a, b] contains a point congruent to pi/2 mod pi
            const double k0 = std::ceil((a - 0.5 * kPi) / kPi);
            if (k0 * kPi + 0.5 * kPi <= b) return 1.0;
            return std::max(std::abs(std::sin(a)), std::abs(std::sin(b)));
        }
        FactorSpec f{FactorKind::sinc, w, s, +1};
        const int m = 2049;
        const double step = (reg_hi - reg_lo) / (m - 1);
        double best_t = reg_lo, best = 0.0;
        for (int i = 0; i < m; ++i) {
            const double t = reg_lo + i * step;
            const double v = std::abs(eval_factor(f, t));
            if (v > best) {
                best = v;
                best_t = t;
            }
        }
        double t = best_t, h = step;
        for (int it = 0; it < 60; ++it) {
            auto g = [&](double x) { return std::abs(eval_factor(f, std::clamp(x, reg_lo, reg_hi))); };
            const double f0 = g(t - h), f1 = g(t), f2 = g(t + h);
            const double denom = f0 - 2.0 * f1 + f2;
            if (denom < 0.0) t = std::clamp(t + 0.5 * h * (f0 - f2) / denom, reg_lo, reg_hi);
            h *= 0.5;
        }
        return std::max(best, std::abs(eval_factor(f, t)));
    };

    double lobe_under = 1.0, so_over = 1.0, so_under = 1.0;
    for (double s : shifts) {
        lobe_under *= factor_at(s, lobe_t);
        so_over *= factor_max_region(s);
        so_under *= factor_at(s, mid);
    }
    if (!(lobe_under > 0.0))
        throw NumericalError("bound regime invalid: lobe underestimate vanished");
    if (!(so_under > 0.0))
        throw NumericalError("bound regime invalid: midpoint amplitude vanished");

    SigmaBounds b{lobe_under / so_over, 1.0 / so_under};
    if (!(b.lower > 0.0) || !std::isfinite(b.upper) || b.lower > b.upper)
        throw NumericalError("bound regime invalid: estimates are inconsistent");
    return b;
}

}  // namespace superosc
