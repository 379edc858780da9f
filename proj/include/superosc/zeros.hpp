// Zero extraction by scan + bisection, and local frequencies from adjacent
// zero spacings (omega_local = pi / gap).
#pragma once

#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

struct ZeroSet {
    std::vector<double> zeros;             // strictly increasing sign-change roots
    std::vector<double> touch_candidates;  // even-multiplicity touch points (no sign change)
    double tol = 0.0;                      // refinement tolerance used
};

// Scans [t_lo, t_hi] with step scan_dt; every sign change is refined by
// bisection to uncertainty <= tol. Grid-local minima of |S| below
// 1e-12 * max|S| without a sign change are reported as touch candidates.
ZeroSet find_zeros(const ProductSignalSpec& spec, double t_lo, double t_hi, double scan_dt,
                   double tol);

struct LocalFrequency {
    double midpoint;
    double omega;  // pi / spacing of the adjacent zero pair
};

std::vector<LocalFrequency> local_frequencies(const ZeroSet& z);

// First positive-side zero each factor pins onto the product: the shift
// itself for a sine factor, shift + pi/omega for a sinc factor (whose peak
// sits at the shift). Sorted ascending.
std::vector<double> prescribed_zeros(const ProductSignalSpec& spec);

}  // namespace superosc
