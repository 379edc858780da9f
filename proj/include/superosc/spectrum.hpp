// Spectral analysis: exact one-period DFT of periodic products, windowed
// tapered DFT of square-integrable (sinc) products, and the analytic
// spectrum of sinc products as an iterated convolution of rectangles.
#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "superosc/sampling.hpp"
#include "superosc/signal.hpp"

namespace superosc {

struct SpectrumReport {
    std::vector<double> frequencies;  // nonnegative angular frequencies
    std::vector<double> magnitudes;   // harmonic amplitude at each frequency
    double omega_declared = 0.0;
    double in_band_energy = 0.0;      // |omega| <= omega_declared
    double leakage_energy = 0.0;      // omega_declared < |omega| <= omega_declared + guard
    double out_band_energy = 0.0;     // beyond the guard band
    double total_energy = 0.0;        // sum of the sampled squares
    double guard = 0.0;               // guard bandwidth (taper smearing allowance)
    double tol = 0.0;
    bool pass = true;

    double out_band_fraction() const {
        return total_energy > 0.0 ? out_band_energy / total_energy : 0.0;
    }
};

// In-place radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse = false);

// DFT of one exact period (n dt = T within 1e-12 relative, n a power of
// two). For a trigonometric polynomial sampled above Nyquist the
// coefficients are exact to roundoff. omega_declared must be set by the
// caller for band bookkeeping.
SpectrumReport periodic_spectrum(const SampledSignal& s, double T, double omega_declared = 0.0);

struct BandlimitCheckOptions {
    double window_halfwidth = 200.0;  // sinc route: analyze [-W, W]
    double taper_length = 20.0;       // cosine ramp length at each window edge
    std::size_t samples = 1 << 15;    // power of two
    double guard = 0.2;               // angular-frequency allowance for taper smearing
};

// Periodic specs (all sine, commensurate): exact one-period DFT, guard 0.
// Sinc products: cosine-tapered windowed DFT with the guard band reported
// separately as leakage. pass <=> out_band_energy / total <= tol.
SpectrumReport verify_bandlimit(const ProductSignalSpec& spec, double tol,
                                const BandlimitCheckOptions& opt = {});

// |Fourier transform| of a pure sinc product on a uniform frequency grid
// over [-omega_max, omega_max]: the iterated convolution of the factor
// rectangles (compactly supported on [-sum Omega_i, sum Omega_i]).
// Normalized so the peak magnitude is 1.
std::vector<double> analytic_sinc_spectrum(const ProductSignalSpec& spec,
                                           const std::vector<double>& omega_grid);

// Header "omega,magnitude".
void write_csv(std::ostream& out, const SpectrumReport& r);

}  // namespace superosc
