#include "superosc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace superosc {

ZeroSet find_zeros(const ProductSignalSpec& spec, double t_lo, double t_hi, double scan_dt,
                   double tol) {
    if (!(t_hi > t_lo)) throw ValidationError("zero scan needs t_hi > t_lo");
    if (!(scan_dt > 0.0)) throw ValidationError("scan step must be positive");
    if (!(tol > 0.0)) throw ValidationError("refinement tolerance must be positive");

    ZeroSet out;
    out.tol = tol;
    const auto n = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / scan_dt)) + 1;
    std::vector<double> ts(n), vs(n);
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = std::min(t_lo + static_cast<double>(i) * scan_dt, t_hi);
        vs[i] = eval_product(spec, ts[i]);
        vmax = std::max(vmax, std::abs(vs[i]));
    }

    // exact grid zeros: classify by the nearest nonzero values on each side
    for (std::size_t i = 0; i < n; ++i) {
        if (vs[i] != 0.0) continue;
        double left = 0.0, right = 0.0;
        for (std::size_t j = i; j-- > 0;)
            if (vs[j] != 0.0) { left = vs[j]; break; }
        for (std::size_t j = i + 1; j < n; ++j)
            if (vs[j] != 0.0) { right = vs[j]; break; }
        if (left * right < 0.0 || left == 0.0 || right == 0.0)
            out.zeros.push_back(ts[i]);
        else
            out.touch_candidates.push_back(ts[i]);
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        double a = ts[i], b = ts[i + 1];
        double fa = vs[i], fb = vs[i + 1];
        if (fa * fb >= 0.0) continue;  // exact zeros handled above
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            const double fm = eval_product(spec, mid);
            if (fm == 0.0) {
                a = b = mid;
                break;
            }
            if (fa * fm < 0.0) {
                b = mid;
                fb = fm;
            } else {
                a = mid;
                fa = fm;
            }
        }
        out.zeros.push_back(0.5 * (a + b));
    }

    // grid-local |S| minima that hug zero without a sign change
    const double touch_level = 1e-12 * vmax;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double m = std::abs(vs[i]);
        if (m > touch_level || m == 0.0) continue;
        if (m <= std::abs(vs[i - 1]) && m <= std::abs(vs[i + 1]) &&
            vs[i - 1] * vs[i + 1] > 0.0) {
            // parabolic refinement on S^2
            double t0 = ts[i - 1], t1 = ts[i], t2 = ts[i + 1];
            for (int it = 0; it < 80; ++it) {
                const double h = t1 - t0;
                const double f0 = std::pow(eval_product(spec, t0), 2);
                const double f1 = std::pow(eval_product(spec, t1), 2);
                const double f2 = std::pow(eval_product(spec, t2), 2);
                const double denom = f0 - 2.0 * f1 + f2;
                double tv = t1;
                if (denom > 0.0) tv = t1 + h * 0.5 * (f0 - f2) / denom;
                tv = std::clamp(tv, t0, t2);
                const double hw = 0.25 * (t2 - t0);
                t0 = tv - hw; t1 = tv; t2 = tv + hw;
                if (t2 - t0 < tol) break;
            }
            out.touch_candidates.push_back(t1);
        }
    }

    // merge refined roots that collapsed to the same point
    std::sort(out.zeros.begin(), out.zeros.end());
    std::vector<double> dedup;
    for (double z : out.zeros)
        if (dedup.empty() || z - dedup.back() > tol) dedup.push_back(z);
    out.zeros = std::move(dedup);
    std::sort(out.touch_candidates.begin(), out.touch_candidates.end());
    return out;
}

std::vector<LocalFrequency> local_frequencies(const ZeroSet& z) {
    if (z.zeros.size() < 2) throw ValidationError("local frequencies need at least two zeros");
    std::vector<LocalFrequency> out;
    out.reserve(z.zeros.size() - 1);
    for (std::size_t i = 0; i + 1 < z.zeros.size(); ++i) {
        const double gap = z.zeros[i + 1] - z.zeros[i];
        out.push_back({0.5 * (z.zeros[i] + z.zeros[i + 1]), std::numbers::pi / gap});
    }
    return out;
}

std::vector<double> prescribed_zeros(const ProductSignalSpec& spec) {
    std::vector<double> zs;
    zs.reserve(spec.factors.size());
    for (const auto& f : spec.factors)
        zs.push_back(f.kind == FactorKind::sine ? f.eps : f.eps + std::numbers::pi / f.omega);
    std::sort(zs.begin(), zs.end());
    return zs;
}

}  // namespace superosc
