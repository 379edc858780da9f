#include "superosc/constructors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace superosc {

namespace {

void check_common(double omega_total, int n_factors, std::size_t n_eps) {
    if (!(omega_total > 0.0)) throw ValidationError("total bandlimit must be positive");
    if (n_factors <= 0) throw ValidationError("factor count must be positive");
    if (n_eps != static_cast<std::size_t>(n_factors))
        throw ValidationError("need exactly one displacement per factor (" +
                              std::to_string(n_factors) + " expected, got " +
                              std::to_string(n_eps) + ")");
}

}  // namespace

ProductSignalSpec build_periodic_translates(double omega_total, int n_factors,
                                            const std::vector<double>& eps) {
    check_common(omega_total, n_factors, eps.size());
    std::vector<FactorSpec> factors;
    factors.reserve(eps.size());
    for (double e : eps)
        factors.push_back({FactorKind::sine, omega_total / n_factors, e, +1});
    return make_product(std::move(factors));
}

ProductSignalSpec build_periodic_antisymmetric(double omega_total, int n_factors,
                                               const std::vector<double>& eps_half,
                                               bool squared) {
    if (!(omega_total > 0.0)) throw ValidationError("total bandlimit must be positive");
    if (n_factors % 2 == 0) throw ValidationError("antisymmetric construction needs odd N");
    if (eps_half.size() != static_cast<std::size_t>((n_factors - 1) / 2))
        throw ValidationError("antisymmetric construction needs (N-1)/2 displacements");
    const int reps = squared ? 2 : 1;
    const double w = omega_total / (reps * n_factors);
    std::vector<FactorSpec> factors;
    for (int r = 0; r < reps; ++r) {
        factors.push_back({FactorKind::sine, w, 0.0, +1});
        for (double e : eps_half) {
            factors.push_back({FactorKind::sine, w, e, +1});
            factors.push_back({FactorKind::sine, w, -e, +1});
        }
    }
    return make_product(std::move(factors));
}

ProductSignalSpec build_sinc_translates(double omega_total, int n_factors,
                                        const std::vector<double>& eps) {
    check_common(omega_total, n_factors, eps.size());
    std::vector<FactorSpec> factors;
    factors.reserve(eps.size());
    for (double e : eps)
        factors.push_back({FactorKind::sinc, omega_total / n_factors, e, +1});
    return make_product(std::move(factors));
}

ProductSignalSpec build_varied_bandwidth(const std::vector<double>& omegas) {
    if (omegas.empty()) throw ValidationError("need at least one bandlimit");
    std::vector<FactorSpec> factors;
    factors.reserve(omegas.size());
    for (double w : omegas) {
        if (!(w > 0.0)) throw ValidationError("bandlimits must be positive");
        factors.push_back({FactorKind::sinc, w, 0.0, +1});
    }
    return make_product(std::move(factors));
}

std::vector<double> epsilons_from_frequency(double omega_local, int count) {
    if (!(omega_local > 0.0)) throw ValidationError("local frequency must be positive");
    if (count <= 0) throw ValidationError("displacement count must be positive");
    const double spacing = std::numbers::pi / omega_local;
    std::vector<double> eps(count);
    for (int i = 0; i < count; ++i) eps[i] = i * spacing;
    return eps;
}

std::vector<double> centered_shifts(int n, double eps) {
    std::vector<double> shifts(n);
    for (int i = 0; i < n; ++i) shifts[i] = (i - 0.5 * (n - 1)) * eps;
    return shifts;
}

ProductSignalSpec build(const SuperoscillationRequest& req) {
    std::vector<double> eps = req.eps;
    if (req.local_omega) {
        if (!eps.empty())
            throw ValidationError("give displacements or a local frequency, not both");
        if (req.family == Family::sine_antisymmetric) {
            // the builder contributes the factor at 0 and mirrors the rest,
            // so hand it the positive displacements {e, 2e, ...}
            eps = epsilons_from_frequency(*req.local_omega, (req.count + 1) / 2);
            eps.erase(eps.begin());
        } else {
            eps = epsilons_from_frequency(*req.local_omega, req.count);
        }
    }
    switch (req.family) {
        case Family::sine_translate:
            return build_periodic_translates(req.omega_total, req.count, eps);
        case Family::sine_antisymmetric:
            return build_periodic_antisymmetric(req.omega_total, req.count, eps);
        case Family::sinc_translate:
            return build_sinc_translates(req.omega_total, req.count, eps);
        case Family::sinc_varied:
            return build_varied_bandwidth(eps);
    }
    throw ValidationError("unknown construction family");
}

}  // namespace superosc
