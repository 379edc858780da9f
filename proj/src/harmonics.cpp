#include "superosc/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>

namespace superosc {

namespace {

// Best rational p/q ~ x with q <= max_den, by continued fractions.
std::pair<std::int64_t, std::int64_t> to_rational(double x, std::int64_t max_den) {
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 64; ++i) {
        const double fl = std::floor(v);
        if (fl > 9e17) break;
        const auto a = static_cast<std::int64_t>(fl);
        if (q0 + a * q1 > max_den && q1 > 0) break;
        const std::int64_t p2 = a * p1 + p0;
        const std::int64_t q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double rem = v - fl;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    return {p1, q1};
}

}  // namespace

double common_fundamental(const std::vector<double>& omegas) {
    // The denominator cap must stay small enough that continued fractions
    // of an irrational ratio cannot sneak under the tolerance: their error
    // is ~1/q^2, so q <= 4096 forces errors above ~6e-9.
    constexpr std::int64_t kMaxDen = 4096;
    if (omegas.empty()) throw ValidationError("no frequencies given");
    const double base = *std::min_element(omegas.begin(), omegas.end());
    std::int64_t den_lcm = 1;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const double ratio = omegas[i] / base;
        auto [p, q] = to_rational(ratio, kMaxDen);
        if (q <= 0 || q > kMaxDen || std::abs(ratio - double(p) / double(q)) > 1e-9 * ratio)
            throw IncommensurateError("factor frequencies are not commensurate: " +
                                      std::to_string(omegas[i]) + " vs " + std::to_string(base));
        const std::int64_t g = std::gcd(den_lcm, q);
        if (den_lcm / g > (std::int64_t(1) << 20) / q)
            throw IncommensurateError("factor frequency ratios need an impractical fundamental");
        den_lcm = den_lcm / g * q;
    }
    // multipliers k_i = p_i * (den_lcm / q_i); reduce by their gcd
    double omega0 = base / double(den_lcm);
    std::int64_t g_all = 0;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const auto k = static_cast<std::int64_t>(std::llround(omegas[i] / omega0));
        g_all = std::gcd(g_all, k);
    }
    if (g_all > 1) omega0 *= double(g_all);
    return omega0;
}

HarmonicSum expand_to_harmonics(const ProductSignalSpec& s) {
    std::vector<double> omegas;
    for (const auto& f : s.factors) {
        if (f.kind != FactorKind::sine)
            throw IncommensurateError("harmonic expansion requires sine factors only");
        omegas.push_back(f.omega);
    }
    const double omega0 = common_fundamental(omegas);

    // coeffs[m] is the coefficient of e^{i m omega0 t}
    std::map<int, std::complex<double>> coeffs{{0, {1.0, 0.0}}};
    const std::complex<double> two_i(0.0, 2.0);
    for (const auto& f : s.factors) {
        const int k = static_cast<int>(std::llround(f.omega / omega0));
        const double theta = f.omega * f.eps;
        const std::complex<double> up = double(f.sign) * std::exp(std::complex<double>(0, -theta)) / two_i;
        const std::complex<double> dn = -double(f.sign) * std::exp(std::complex<double>(0, theta)) / two_i;
        std::map<int, std::complex<double>> next;
        for (const auto& [m, c] : coeffs) {
            next[m + k] += c * up;
            next[m - k] += c * dn;
        }
        coeffs = std::move(next);
    }

    double peak = 0.0;
    for (const auto& [m, c] : coeffs) peak = std::max(peak, std::abs(c));

    HarmonicSum h;
    h.omega0 = omega0;
    for (const auto& [m, c] : coeffs) {
        if (m < 0) continue;  // folded into the m >= 0 terms below
        HarmonicTerm term;
        term.k = m;
        if (m == 0) {
            term.cos_coef = c.real();
            term.sin_coef = 0.0;
        } else {
            term.cos_coef = 2.0 * c.real();
            term.sin_coef = -2.0 * c.imag();
        }
        // terms that cancelled exactly leave ~1e-17 dust; drop them
        if (std::abs(term.cos_coef) < 1e-14 * peak) term.cos_coef = 0.0;
        if (std::abs(term.sin_coef) < 1e-14 * peak) term.sin_coef = 0.0;
        if (term.cos_coef != 0.0 || term.sin_coef != 0.0) h.terms.push_back(term);
    }
    return h;
}

double eval(const HarmonicSum& h, double t) {
    double v = 0.0;
    for (const auto& term : h.terms) {
        const double ph = term.k * h.omega0 * t;
        v += term.cos_coef * std::cos(ph) + term.sin_coef * std::sin(ph);
    }
    return v;
}

HarmonicSum derivative(const HarmonicSum& h, int order) {
    if (order < 0) throw ValidationError("derivative order must be >= 0");
    HarmonicSum d = h;
    for (int pass = 0; pass < order; ++pass) {
        for (auto& term : d.terms) {
            const double w = term.k * d.omega0;
            // d/dt [a cos + b sin] = (b w) cos + (-a w) sin
            const double a = term.cos_coef, b = term.sin_coef;
            term.cos_coef = b * w;
            term.sin_coef = -a * w;
        }
    }
    return d;
}

int max_harmonic_index(const HarmonicSum& h) {
    int k = 0;
    for (const auto& term : h.terms) k = std::max(k, term.k);
    return k;
}

double period(const HarmonicSum& h) { return 2.0 * std::numbers::pi / h.omega0; }

}  // namespace superosc
