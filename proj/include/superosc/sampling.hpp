// Uniform sampling of product signals and CSV export.
#pragma once

#include <ostream>
#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

struct SampledSignal {
    double t0 = 0.0;
    double dt = 1.0;  // > 0
    std::vector<double> values;

    double t_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
};

// values[k] = eval_product(spec, t0 + k dt); sequential and deterministic.
SampledSignal sample_uniform(const ProductSignalSpec& spec, double t0, double dt, std::size_t n);

// Header "t,value", one row per sample, %.17g formatting.
void write_csv(std::ostream& out, const SampledSignal& s);

}  // namespace superosc
