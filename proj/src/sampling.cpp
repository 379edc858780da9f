#include "superosc/sampling.hpp"

#include <cstdio>

namespace superosc {

SampledSignal sample_uniform(const ProductSignalSpec& spec, double t0, double dt, std::size_t n) {
    if (!(dt > 0.0)) throw ValidationError("sample step must be positive");
    if (n < 2) throw ValidationError("need at least two samples");
    SampledSignal s;
    s.t0 = t0;
    s.dt = dt;
    s.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) s.values[k] = eval_product(spec, s.t_at(k));
    return s;
}

void write_csv(std::ostream& out, const SampledSignal& s) {
    out << "t,value\n";
    char buf[64];
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.t_at(k), s.values[k]);
        out << buf;
    }
}

}  // namespace superosc
