// Exact harmonic expansion of periodic sine products.
//
// A product of sine factors whose bandlimits are integer multiples of a
// common fundamental omega0 is a finite trigonometric polynomial
//
//   S(t) = sum_k  a_k cos(k omega0 t) + b_k sin(k omega0 t),
//
// obtained here by folding complex-exponential coefficients factor by
// factor. Harmonic indices stay exact integers; only the coefficients are
// floating point. The highest index is sum_i (Omega_i / omega0), so the
// declared bandlimit is realized spectrally by construction.
#pragma once

#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

struct HarmonicTerm {
    int k = 0;            // harmonic index, >= 0
    double cos_coef = 0;  // a_k
    double sin_coef = 0;  // b_k
};

struct HarmonicSum {
    double omega0 = 1.0;              // fundamental angular frequency
    std::vector<HarmonicTerm> terms;  // sorted by k, one entry per index
};

// Requires every factor to be sine kind with commensurate bandlimits;
// throws IncommensurateError otherwise.
HarmonicSum expand_to_harmonics(const ProductSignalSpec& s);

double eval(const HarmonicSum& h, double t);

// Termwise derivative of the given order; order 2 maps each term to
// -(k omega0)^2 times itself.
HarmonicSum derivative(const HarmonicSum& h, int order);

int max_harmonic_index(const HarmonicSum& h);
double period(const HarmonicSum& h);  // 2 pi / omega0

// Largest omega0 such that every factor bandlimit is an integer multiple
// of it (within 1e-9 relative). Throws IncommensurateError when the
// frequencies admit no such fundamental with denominator <= 1e6.
double common_fundamental(const std::vector<double>& omegas);

}  // namespace superosc
