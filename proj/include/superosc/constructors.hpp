// Named constructions of superoscillating product signals:
// translated periodic sines, the antisymmetric periodic variant (plus its
// squared, even form), translated sincs and varied-bandwidth sincs.
#pragma once

#include <optional>
#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

enum class Family { sine_translate, sine_antisymmetric, sinc_translate, sinc_varied };

// N sine factors sin((Omega/N)(t - eps_n)); vanishes at every eps_n.
ProductSignalSpec build_periodic_translates(double omega_total, int n_factors,
                                            const std::vector<double>& eps);

// Factor set {sin(w t)} u {sin(w (t -+ eps_n))}, N = 1 + 2*eps_half.size()
// odd, antisymmetric about the origin. Unsquared: w = Omega/N. With
// squared = true every factor appears twice with w = Omega/(2N), giving an
// even function with the same declared bandlimit.
ProductSignalSpec build_periodic_antisymmetric(double omega_total, int n_factors,
                                               const std::vector<double>& eps_half,
                                               bool squared = false);

// N sinc factors with bandlimit Omega/N and shifts eps_n; decays as |t|^-N.
ProductSignalSpec build_sinc_translates(double omega_total, int n_factors,
                                        const std::vector<double>& eps);

// Sinc factors centred at the origin with the given bandlimits.
ProductSignalSpec build_varied_bandwidth(const std::vector<double>& omegas);

// m consecutive displacements {0, e, 2e, ...} with e = pi / omega_local.
std::vector<double> epsilons_from_frequency(double omega_local, int count);

// Shifts centered on the origin with uniform spacing eps (the arrangement
// used by the dynamic-range bound analysis).
std::vector<double> centered_shifts(int n, double eps);

struct SuperoscillationRequest {
    Family family = Family::sine_translate;
    double omega_total = 0.0;
    int count = 0;
    std::vector<double> eps;              // displacements, or bandlimits for sinc_varied
    std::optional<double> local_omega;    // alternative to eps: spacing pi/omega
};

ProductSignalSpec build(const SuperoscillationRequest& req);

}  // namespace superosc
