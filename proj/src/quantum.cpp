#include "superosc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include <json.hpp>

namespace superosc {

namespace {

// Zeros of a harmonic sum on [lo, hi) by scan + bisection.
std::vector<double> harmonic_zeros(const HarmonicSum& h, double lo, double hi, std::size_t scan_n,
                                   double tol) {
    std::vector<double> zs;
    const double step = (hi - lo) / static_cast<double>(scan_n);
    double prev_t = lo, prev_v = eval(h, lo);
    for (std::size_t i = 1; i <= scan_n; ++i) {
        const double t = lo + static_cast<double>(i) * step;
        const double v = eval(h, t);
        if (prev_v == 0.0) {
            zs.push_back(prev_t);
        } else if (prev_v * v < 0.0) {
            double a = prev_t, b = t, fa = prev_v;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                const double fm = eval(h, m);
                if (fm == 0.0) { a = b = m; break; }
                if (fa * fm < 0.0) b = m; else { a = m; fa = fm; }
            }
            zs.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_v = v;
    }
    return zs;
}

// Refined extrema of psi over one period: values at the zeros of psi'.
std::pair<double, double> psi_min_max(const HarmonicSum& psi, std::size_t scan_n) {
    const double T = period(psi);
    const HarmonicSum d1 = derivative(psi, 1);
    const auto crit = harmonic_zeros(d1, 0.0, T, scan_n, 1e-13 * T);
    double lo = eval(psi, 0.0), hi = lo;
    for (double xc : crit) {
        const double v = eval(psi, xc);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // constant psi has no critical points; grid fallback keeps us honest
    for (std::size_t i = 0; i < 64; ++i) {
        const double v = eval(psi, T * static_cast<double>(i) / 64.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

// Periodic tridiagonal matrix diag(d) + off-diagonal e (including the
// wrap-around corners), factorized as a bordered LDL^T: the leading
// (n-1)-block is tridiagonal, the last row/column is the border.
struct CyclicTridiagLDLT {
    std::vector<double> pivots;   // m = n-1 pivots of the leading block
    std::vector<double> lower;    // subdiagonal multipliers of the block
    std::vector<double> w;        // block^{-1} * border column
    double schur = 0.0;
    double e = 0.0;
    bool ok = false;
    int negative_pivots = 0;

    void factorize(const std::vector<double>& d, double off) {
        const std::size_t m = d.size() - 1;
        pivots.assign(m, 0.0);
        lower.assign(m, 0.0);
        e = off;
        negative_pivots = 0;
        ok = true;
        for (std::size_t i = 0; i < m; ++i) {
            double piv = d[i];
            if (i > 0) piv -= lower[i] * e;  // lower[i] = e / pivots[i-1]
            pivots[i] = piv;
            if (piv < 0.0) ++negative_pivots;
            if (piv == 0.0) { ok = false; return; }
            if (i + 1 < m) lower[i + 1] = e / piv;
        }
        // border column b: b[0] = e (corner), b[m-1] += e (neighbour)
        std::vector<double> b(m, 0.0);
        b[0] = e;
        b[m - 1] += e;
        w = solve_block(b);
        double bw = b[0] * w[0] + b[m - 1] * w[m - 1];
        if (m == 1) bw = b[0] * w[0];
        schur = d[m] - bw;
        if (schur < 0.0) ++negative_pivots;
        if (schur == 0.0) ok = false;
    }

    std::vector<double> solve_block(std::vector<double> r) const {
        const std::size_t m = pivots.size();
        for (std::size_t i = 1; i < m; ++i) r[i] -= lower[i] * r[i - 1];
        for (std::size_t i = 0; i < m; ++i) r[i] /= pivots[i];
        for (std::size_t i = m - 1; i-- > 0;) r[i] -= lower[i + 1] * r[i + 1];
        return r;
    }

    std::vector<double> solve(const std::vector<double>& rhs) const {
        const std::size_t m = pivots.size();
        std::vector<double> head(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(m));
        std::vector<double> y = solve_block(std::move(head));
        double by = e * y[0] + e * y[m - 1];
        if (m == 1) by = (2.0 * e) * y[0];
        const double x_last = (rhs[m] - by) / schur;
        std::vector<double> x(m + 1);
        for (std::size_t i = 0; i < m; ++i) x[i] = y[i] - x_last * w[i];
        x[m] = x_last;
        return x;
    }
};

double norm2(const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

void normalize(std::vector<double>& v) {
    const double nn = norm2(v);
    for (auto& x : v) x /= nn;
}

// y = H v with H = -D2 + diag(V), periodic stencil.
std::vector<double> apply_h(const std::vector<double>& V, double inv_h2,
                            const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double left = v[(i + n - 1) % n];
        const double right = v[(i + 1) % n];
        y[i] = (2.0 * v[i] - left - right) * inv_h2 + V[i] * v[i];
    }
    return y;
}

}  // namespace

LiftBracket critical_lift(const HarmonicSum& psi, std::size_t resolution) {
    const auto [lo, hi] = psi_min_max(psi, std::max<std::size_t>(resolution, 1024));
    return LiftBracket{-lo, -hi};
}

HarmonicSum second_derivative(const HarmonicSum& psi) { return derivative(psi, 2); }

PotentialSpec build_potential(const HarmonicSum& psi, double lift, std::size_t grid_n) {
    if (grid_n < 4) throw ValidationError("potential grid needs at least 4 points");
    PotentialSpec p;
    p.psi = psi;
    p.lift = lift;
    p.period = period(psi);
    const HarmonicSum d2 = derivative(psi, 2);
    const double h = p.period / static_cast<double>(grid_n);
    p.x.resize(grid_n);
    p.V.resize(grid_n);
    p.psi_lifted.resize(grid_n);
    p.singular.assign(grid_n, 0);

    double psi_abs_max = 0.0;
    for (std::size_t k = 0; k < grid_n; ++k) {
        p.x[k] = h * static_cast<double>(k);
        const double pv = eval(psi, p.x[k]);
        p.psi_lifted[k] = pv + lift;
        psi_abs_max = std::max(psi_abs_max, std::abs(pv));
    }
    const double flag_tol = 1e-10 * (psi_abs_max + std::abs(lift));
    for (std::size_t k = 0; k < grid_n; ++k) {
        if (std::abs(p.psi_lifted[k]) < flag_tol) {
            p.singular[k] = 1;
            p.V[k] = 0.0;
        } else {
            p.V[k] = eval(d2, p.x[k]) / p.psi_lifted[k];
        }
    }

    // classify from the refined denominator range, not the grid: a
    // below-critical dip can be narrower than the grid spacing
    const auto [psi_min, psi_max] = psi_min_max(psi, 1u << 15);
    const double dmin = psi_min + lift, dmax = psi_max + lift;
    if (dmin > flag_tol || dmax < -flag_tol) {
        p.status = PotentialStatus::ok;
    } else if (dmin < -flag_tol && dmax > flag_tol) {
        p.status = PotentialStatus::crossing_unphysical;
        // sign-change locations of the denominator
        HarmonicSum shifted = psi;
        bool has_const = false;
        for (auto& term : shifted.terms)
            if (term.k == 0) { term.cos_coef += lift; has_const = true; }
        if (!has_const) shifted.terms.insert(shifted.terms.begin(), HarmonicTerm{0, lift, 0.0});
        p.singular_locations =
            harmonic_zeros(shifted, 0.0, p.period, 1u << 15, 1e-12 * p.period);
    } else {
        p.status = PotentialStatus::touching_critical;
        const HarmonicSum d1 = derivative(psi, 1);
        for (double xc : harmonic_zeros(d1, 0.0, p.period, 1u << 15, 1e-13 * p.period))
            if (std::abs(eval(psi, xc) + lift) <= 2.0 * flag_tol) p.singular_locations.push_back(xc);
    }
    return p;
}

EigenReport solve_ground_state(const PotentialSpec& p) {
    if (!p.clean())
        throw SingularPotentialError(p.status == PotentialStatus::crossing_unphysical
                                         ? "potential has crossing singularities: unphysical"
                                         : "potential is critically lifted (touching singularity)");
    const std::size_t n = p.size();
    if (n < 128) throw ValidationError("eigensolve needs a grid of at least 128 points");
    const double h = p.period / static_cast<double>(n);
    const double inv_h2 = 1.0 / (h * h);

    const double vmin = *std::min_element(p.V.begin(), p.V.end());
    const double vmax = *std::max_element(p.V.begin(), p.V.end());
    const double h_scale = 4.0 * inv_h2 + std::max(std::abs(vmin), std::abs(vmax));
    const double target = 1e-12 * h_scale;

    std::vector<double> v = p.psi_lifted;
    if (norm2(v) == 0.0) v.assign(n, 1.0);
    normalize(v);

    double sigma = vmin - 0.1 * (1.0 + vmax - vmin);
    const double sigma_floor = sigma;
    double theta = 0.0, res = std::numeric_limits<double>::max();
    int iters = 0;
    CyclicTridiagLDLT fact;
    std::vector<double> d(n);

    auto factor_at = [&](double s) {
        for (std::size_t i = 0; i < n; ++i) d[i] = 2.0 * inv_h2 + p.V[i] - s;
        fact.factorize(d, -inv_h2);
        for (int nudge = 0; !fact.ok && nudge < 8; ++nudge) {
            s -= std::max(1e-14 * h_scale, std::abs(s) * 1e-14);
            for (std::size_t i = 0; i < n; ++i) d[i] = 2.0 * inv_h2 + p.V[i] - s;
            fact.factorize(d, -inv_h2);
        }
        if (!fact.ok)
            throw NonConvergedError("shifted factorization failed repeatedly", res);
        return s;
    };

    int restarts = 0;
    for (iters = 1; iters <= 100; ++iters) {
        factor_at(sigma);
        std::vector<double> x = fact.solve(v);
        normalize(x);
        v = std::move(x);
        const auto hv = apply_h(p.V, inv_h2, v);
        theta = std::inner_product(v.begin(), v.end(), hv.begin(), 0.0);
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = hv[i] - theta * v[i];
            r2 += ri * ri;
        }
        res = std::sqrt(r2);
        if (res <= target) {
            // certify there is no eigenvalue below the converged pair
            const double margin = std::max(10.0 * res, 1e-9 * h_scale);
            factor_at(theta - margin);
            if (fact.negative_pivots == 0) break;
            if (++restarts > 3)
                throw NonConvergedError("inverse iteration landed on an excited state", res);
            // deterministic perturbed restart from below the spectrum
            sigma = sigma_floor;
            for (std::size_t i = 0; i < n; ++i)
                v[i] = 1.0 + 0.5 * std::sin(2.0 * std::numbers::pi * static_cast<double>(i * (i + restarts)) /
                                            static_cast<double>(n));
            normalize(v);
            continue;
        }
        // residual bound: the nearest eigenvalue is within res of theta, so
        // theta - res stays at or below the ground state
        sigma = theta - res - 1e-15 * h_scale;
    }
    if (res > target) throw NonConvergedError("eigensolve did not reach the residual target", res);

    EigenReport rep;
    rep.E0 = theta;
    rep.ground = v;
    rep.n = n;
    rep.residual = res;
    rep.iterations = iters;
    int nodes = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] * v[(i + 1) % n] < 0.0) ++nodes;
    rep.node_count = nodes;
    const double dot = std::inner_product(v.begin(), v.end(), p.psi_lifted.begin(), 0.0);
    rep.overlap = std::abs(dot) / (norm2(v) * norm2(p.psi_lifted));
    return rep;
}

OscillationReport potential_oscillation_report(const PotentialSpec& p, const Region& region,
                                               std::size_t scan_n) {
    if (!p.clean())
        throw SingularPotentialError("oscillation report needs a non-singular potential");
    if (!(region.width() > 0.0) || region.width() >= p.period)
        throw ValidationError("region must be a proper sub-interval of the period");

    const HarmonicSum d1 = derivative(p.psi, 1);
    const HarmonicSum d2 = derivative(p.psi, 2);
    const HarmonicSum d3 = derivative(p.psi, 3);
    auto g = [&](double t) {
        return eval(d3, t) * (eval(p.psi, t) + p.lift) - eval(d2, t) * eval(d1, t);
    };

    // scan one full period positioned so the region sits inside it; samples
    // sit half a step off the period endpoints so round-number extrema do
    // not land exactly on a sample, and the wrap pair closes the circle
    const double lo = 0.5 * (region.lo + region.hi) - 0.5 * p.period;
    const double step = p.period / static_cast<double>(scan_n);
    OscillationReport rep;
    auto count_bracket = [&](double a, double b, double fa, double fb) {
        if (fa * fb >= 0.0) return;
        while (b - a > 1e-10 * p.period) {
            const double m = 0.5 * (a + b);
            const double fm = g(m);
            if (fm == 0.0) { a = b = m; break; }
            if (fa * fm < 0.0) { b = m; fb = fm; } else { a = m; fa = fm; }
        }
        const double root = 0.5 * (a + b);
        if (root >= region.lo && root <= region.hi)
            ++rep.extrema_inside;
        else
            ++rep.extrema_outside;
    };
    double prev_t = lo + 0.5 * step, prev_v = g(prev_t);
    const double first_t = prev_t, first_v = prev_v;
    for (std::size_t i = 1; i < scan_n; ++i) {
        const double t = lo + (static_cast<double>(i) + 0.5) * step;
        const double v = g(t);
        count_bracket(prev_t, t, prev_v, v);
        prev_t = t;
        prev_v = v;
    }
    count_bracket(prev_t, first_t + p.period, prev_v, first_v);
    rep.density_inside = rep.extrema_inside / region.width();
    rep.density_outside = rep.extrema_outside / (p.period - region.width());
    rep.ratio = rep.density_outside > 0.0
                    ? rep.density_inside / rep.density_outside
                    : std::numeric_limits<double>::infinity();
    return rep;
}

void write_csv(std::ostream& out, const PotentialSpec& p) {
    out << "x,V\n";
    char buf[64];
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x[k], p.V[k]);
        out << buf;
    }
}

void write_csv(std::ostream& out, const PotentialSpec& p, const EigenReport& r) {
    out << "x,psi_lifted,ground_vec\n";
    char buf[96];
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x[k], p.psi_lifted[k],
                      r.ground[k]);
        out << buf;
    }
}

std::string to_json_string(const PotentialSpec& p, int indent) {
    nlohmann::json doc;
    doc["C"] = p.lift;
    doc["period"] = p.period;
    doc["x"] = p.x;
    doc["V"] = p.V;
    doc["psi_lifted"] = p.psi_lifted;
    doc["singular"] = p.singular;
    doc["singular_locations"] = p.singular_locations;
    doc["status"] = p.status == PotentialStatus::ok
                        ? "ok"
                        : (p.status == PotentialStatus::touching_critical ? "touching_critical"
                                                                          : "crossing_unphysical");
    nlohmann::json hj;
    hj["omega0"] = p.psi.omega0;
    hj["terms"] = nlohmann::json::array();
    for (const auto& t : p.psi.terms) hj["terms"].push_back({t.k, t.cos_coef, t.sin_coef});
    doc["psi_harmonics"] = hj;
    return doc.dump(indent);
}

PotentialSpec potential_from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed potential JSON: ") + e.what());
    }
    PotentialSpec p;
    try {
        p.lift = doc.at("C").get<double>();
        p.period = doc.at("period").get<double>();
        p.x = doc.at("x").get<std::vector<double>>();
        p.V = doc.at("V").get<std::vector<double>>();
        p.psi_lifted = doc.at("psi_lifted").get<std::vector<double>>();
        p.singular = doc.at("singular").get<std::vector<std::uint8_t>>();
        if (doc.contains("singular_locations"))
            p.singular_locations = doc.at("singular_locations").get<std::vector<double>>();
        const std::string st = doc.at("status").get<std::string>();
        p.status = st == "ok" ? PotentialStatus::ok
                              : (st == "touching_critical" ? PotentialStatus::touching_critical
                                                           : PotentialStatus::crossing_unphysical);
        const auto& hj = doc.at("psi_harmonics");
        p.psi.omega0 = hj.at("omega0").get<double>();
        for (const auto& row : hj.at("terms"))
            p.psi.terms.push_back({row.at(0).get<int>(), row.at(1).get<double>(),
                                   row.at(2).get<double>()});
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("incomplete potential JSON: ") + e.what());
    }
    if (p.x.size() != p.V.size() || p.x.size() != p.psi_lifted.size() ||
        p.x.size() != p.singular.size())
        throw ValidationError("potential JSON arrays disagree in length");
    return p;
}

std::string eigen_summary_json(const PotentialSpec& p, const EigenReport& r) {
    nlohmann::json doc;
    doc["E0"] = r.E0;
    doc["node_count"] = r.node_count;
    doc["overlap"] = r.overlap;
    doc["n"] = r.n;
    doc["C"] = p.lift;
    return doc.dump();
}

}  // namespace superosc
