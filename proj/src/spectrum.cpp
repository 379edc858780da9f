#include "superosc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "superosc/harmonics.hpp"

namespace superosc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Shared energy/magnitude bookkeeping given the full complex DFT.
SpectrumReport partition_bands(const std::vector<std::complex<double>>& X, double dt,
                               double omega_declared, double guard, double total_time_energy) {
    const std::size_t n = X.size();
    const double dom = 2.0 * kPi / (static_cast<double>(n) * dt);
    SpectrumReport r;
    r.omega_declared = omega_declared;
    r.guard = guard;
    const double band_edge = omega_declared * (1.0 + 1e-12) + 1e-12;
    for (std::size_t k = 0; k < n; ++k) {
        const double om = (k <= n / 2) ? k * dom : (n - k) * dom;
        const double e = std::norm(X[k]) / static_cast<double>(n);
        if (om <= band_edge)
            r.in_band_energy += e;
        else if (om <= band_edge + guard)
            r.leakage_energy += e;
        else
            r.out_band_energy += e;
    }
    r.total_energy = total_time_energy;
    r.frequencies.resize(n / 2 + 1);
    r.magnitudes.resize(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        r.frequencies[k] = k * dom;
        const double scale = (k == 0 || k == n / 2) ? 1.0 : 2.0;
        r.magnitudes[k] = scale * std::abs(X[k]) / static_cast<double>(n);
    }
    return r;
}

}  // namespace

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw ValidationError("FFT size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

SpectrumReport periodic_spectrum(const SampledSignal& s, double T, double omega_declared) {
    const std::size_t n = s.values.size();
    if (!is_pow2(n)) throw ValidationError("periodic spectrum needs a power-of-two sample count");
    const double covered = static_cast<double>(n) * s.dt;
    if (std::abs(covered - T) > 1e-12 * std::max(std::abs(T), 1.0))
        throw ValidationError("sample grid does not cover exactly one period");
    std::vector<std::complex<double>> X(s.values.begin(), s.values.end());
    fft_radix2(X);
    double time_energy = 0.0;
    for (double v : s.values) time_energy += v * v;
    return partition_bands(X, s.dt, omega_declared, 0.0, time_energy);
}

SpectrumReport verify_bandlimit(const ProductSignalSpec& spec, double tol,
                                const BandlimitCheckOptions& opt) {
    const double omega_total = product_bandlimit(spec);
    const bool all_sine = std::all_of(spec.factors.begin(), spec.factors.end(),
                                      [](const FactorSpec& f) { return f.kind == FactorKind::sine; });
    SpectrumReport r;
    bool periodic_route = false;
    if (all_sine) {
        try {
            const HarmonicSum h = expand_to_harmonics(spec);
            const double T = period(h);
            const auto kmax = static_cast<std::size_t>(
                std::llround(omega_total / h.omega0));
            const std::size_t n = next_pow2(std::max<std::size_t>(64, 4 * kmax + 8));
            const SampledSignal s = sample_uniform(spec, 0.0, T / static_cast<double>(n), n);
            r = periodic_spectrum(s, T, omega_total);
            periodic_route = true;
        } catch (const IncommensurateError&) {
            // fall through to the windowed route
        }
    }
    if (!periodic_route) {
        const double W = opt.window_halfwidth;
        const double L = opt.taper_length;
        const std::size_t n = opt.samples;
        if (!is_pow2(n)) throw ValidationError("windowed spectrum needs a power-of-two sample count");
        if (!(W > 0.0) || !(L >= 0.0) || L >= W)
            throw ValidationError("taper length must lie in [0, window halfwidth)");
        const double dt = 2.0 * W / static_cast<double>(n);
        std::vector<std::complex<double>> X(n);
        double time_energy = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double t = -W + dt * static_cast<double>(k);
            double w = 1.0;
            const double edge = std::abs(t) - (W - L);
            if (L > 0.0 && edge > 0.0) w = 0.5 * (1.0 + std::cos(kPi * edge / L));
            const double v = eval_product(spec, t) * w;
            X[k] = v;
            time_energy += v * v;
        }
        fft_radix2(X);
        r = partition_bands(X, dt, omega_total, opt.guard, time_energy);
    }
    r.tol = tol;
    r.pass = r.out_band_fraction() <= tol;
    return r;
}

std::vector<double> analytic_sinc_spectrum(const ProductSignalSpec& spec,
                                           const std::vector<double>& omega_grid) {
    if (omega_grid.size() < 2) throw ValidationError("frequency grid needs at least two points");
    for (const auto& f : spec.factors)
        if (f.kind != FactorKind::sinc)
            throw ValidationError("analytic spectrum is defined for pure sinc products");
    const double dom = omega_grid[1] - omega_grid[0];
    if (!(dom > 0.0)) throw ValidationError("frequency grid must be increasing");
    const double support = product_bandlimit(spec);
    const auto K = static_cast<std::size_t>(std::ceil(support / dom)) + 2;
    const std::size_t m = 2 * K + 1;  // internal symmetric grid j*dom, j in [-K, K]
    auto om_at = [&](std::size_t j) { return (static_cast<double>(j) - static_cast<double>(K)) * dom; };

    // fractional-coverage rectangle for each factor, with the shift phase
    auto factor_spectrum = [&](const FactorSpec& f) {
        std::vector<std::complex<double>> a(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double om = om_at(j);
            const double cover = std::clamp((f.omega - std::abs(om)) / dom + 0.5, 0.0, 1.0);
            if (cover > 0.0)
                a[j] = double(f.sign) * cover *
                       std::exp(std::complex<double>(0.0, -om * f.eps)) / f.omega;
        }
        return a;
    };

    std::vector<std::complex<double>> acc = factor_spectrum(spec.factors[0]);
    for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        const auto b = factor_spectrum(spec.factors[i]);
        std::vector<std::complex<double>> next(m);
        for (std::size_t j = 0; j < m; ++j) {
            std::complex<double> sum(0.0, 0.0);
            // (a*b)_j = sum_k a_k b_{j-k} dom, indices kept inside the grid
            for (std::size_t k = 0; k < m; ++k) {
                const std::ptrdiff_t l = static_cast<std::ptrdiff_t>(j) + static_cast<std::ptrdiff_t>(K) -
                                         static_cast<std::ptrdiff_t>(k);
                if (l < 0 || l >= static_cast<std::ptrdiff_t>(m)) continue;
                sum += acc[k] * b[static_cast<std::size_t>(l)];
            }
            next[j] = sum * dom;
        }
        acc = std::move(next);
    }

    double peak = 0.0;
    for (const auto& c : acc) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) peak = 1.0;

    std::vector<double> out(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        const double pos = omega_grid[i] / dom + static_cast<double>(K);
        const auto j0 = static_cast<std::ptrdiff_t>(std::floor(pos));
        const double frac = pos - static_cast<double>(j0);
        auto mag_at = [&](std::ptrdiff_t j) {
            return (j < 0 || j >= static_cast<std::ptrdiff_t>(m)) ? 0.0 : std::abs(acc[static_cast<std::size_t>(j)]);
        };
        out[i] = ((1.0 - frac) * mag_at(j0) + frac * mag_at(j0 + 1)) / peak;
    }
    return out;
}

void write_csv(std::ostream& out, const SpectrumReport& r) {
    out << "omega,magnitude\n";
    char buf[64];
    for (std::size_t k = 0; k < r.frequencies.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.frequencies[k], r.magnitudes[k]);
        out << buf;
    }
}

}  // namespace superosc
