// Dynamic range sigma = (largest overall amplitude) / (largest amplitude
// inside the superoscillating stretch), plus the per-factor lower/upper
// bound procedure for the uniformly spaced sine and sinc constructions.
#pragma once

#include "superosc/constructors.hpp"
#include "superosc/signal.hpp"

namespace superosc {

struct Region {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

struct DynamicRangeReport {
    double sigma = 1.0;             // >= 1 unless the region holds the global max
    double global_max_abs = 0.0;
    double superosc_max_abs = 0.0;
    Region region;
    bool region_covers_max = false;
};

// Default superoscillating region: [min prescribed zero - gap/2,
// max prescribed zero + gap/2] with gap the smallest prescribed spacing.
Region default_superosc_region(const ProductSignalSpec& spec);

// Maxima are located on a dense scan and refined in place; the scan is
// internally refined until sigma is converged to 1e-6 relative (doubling
// the resolution once more changes it less than that).
DynamicRangeReport dynamic_range(const ProductSignalSpec& spec, const Region& region,
                                 double initial_dt = 0.0);

struct SigmaBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Per-factor bound procedure for the centered uniform-spacing construction
// of the given family (sine_translate or sinc_translate):
//   lower = |prod_n b_n(t*)| / prod_n max_region |b_n|
//   upper = 1 / |prod_n b_n(m)|
// with t* the lobe point (sine: N pi / (2 Omega); sinc: the shift centroid),
// m the central inter-zero midpoint, and the region the default rule above.
// sigma of the matching build satisfies lower <= sigma <= upper. Throws
// NumericalError when an estimate degenerates (region reaching the lobe,
// vanishing midpoint value).
SigmaBounds sigma_bounds(Family family, int n_factors, double eps, double omega_total);

}  // namespace superosc
