#include "superosc/additive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <json.hpp>

namespace superosc {

namespace {

namespace bmp = boost::multiprecision;
using float128 = bmp::number<bmp::cpp_bin_float<128, bmp::digit_base_2>>;
using float256 = bmp::number<bmp::cpp_bin_float<256, bmp::digit_base_2>>;
using float512 = bmp::number<bmp::cpp_bin_float<512, bmp::digit_base_2>>;

template <class Real>
Real kernel_value(const KernelSpec& k, Real dt) {
    using std::abs;
    using std::cos;
    using std::sin;
    if (k.kind == KernelKind::sinc) {
        const Real x = Real(k.omega) * dt;
        if (x == 0) return Real(1);
        return sin(x) / x;
    }
    // Dirichlet via the cosine sum: exact and stable at every precision.
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    const Real z = two_pi * dt / Real(k.period);
    Real acc(1);
    for (int j = 1; j <= k.order; ++j) acc += 2 * cos(Real(j) * z);
    return acc / Real(2 * k.order + 1);
}

// Cyclic Jacobi eigenvalues of a symmetric matrix (row-major, n x n).
template <class Real>
std::vector<Real> jacobi_eigenvalues(std::vector<Real> a, std::size_t n) {
    using std::abs;
    using std::sqrt;
    auto at = [&](std::size_t i, std::size_t j) -> Real& { return a[i * n + j]; };
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off(0), diag(0);
        for (std::size_t i = 0; i < n; ++i) {
            diag += abs(at(i, i));
            for (std::size_t j = i + 1; j < n; ++j) off += abs(at(i, j));
        }
        if (off <= eps * (diag + Real(1))) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (at(p, q) == 0) continue;
                const Real theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                Real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
                if (theta < 0) t = -t;
                const Real c = 1 / sqrt(t * t + 1);
                const Real s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const Real aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Real api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<Real> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Cholesky solve of the SPD system G c = a; returns false on a
// non-positive pivot.
template <class Real>
bool cholesky_solve(std::vector<Real> g, std::size_t n, std::vector<Real>& rhs) {
    using std::sqrt;
    auto at = [&](std::size_t i, std::size_t j) -> Real& { return g[i * n + j]; };
    for (std::size_t j = 0; j < n; ++j) {
        Real d = at(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= at(j, k) * at(j, k);
        if (!(d > 0)) return false;
        at(j, j) = sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            Real v = at(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= at(i, k) * at(j, k);
            at(i, j) = v / at(j, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Real v = rhs[i];
        for (std::size_t k = 0; k < i; ++k) v -= at(i, k) * rhs[k];
        rhs[i] = v / at(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        Real v = rhs[ii];
        for (std::size_t k = ii + 1; k < n; ++k) v -= at(k, ii) * rhs[k];
        rhs[ii] = v / at(ii, ii);
    }
    return true;
}

template <class Real>
AdditiveSolution solve_at(const ConstraintSet& cs, const KernelSpec& kernel, int bits) {
    const std::size_t n = cs.points.size();
    std::vector<Real> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i * n + j] = kernel_value<Real>(kernel, Real(cs.points[i].t) - Real(cs.points[j].t));

    const auto ev = jacobi_eigenvalues(g, n);
    const Real lo = ev.front(), hi = ev.back();
    const double cond_est = lo != 0 ? std::abs(double(hi / lo)) : std::numeric_limits<double>::infinity();
    if (!(lo > 0))
        throw IllConditionedError(
            "Gram matrix is not positive definite at the working precision", cond_est);

    std::vector<Real> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Real(cs.points[i].a);
    if (!cholesky_solve(g, n, c))
        throw IllConditionedError("Cholesky factorization failed at the working precision",
                                  cond_est);

    Real res(0), amax(0);
    for (std::size_t i = 0; i < n; ++i) {
        Real row(0);
        for (std::size_t j = 0; j < n; ++j) row += g[i * n + j] * c[j];
        using std::abs;
        res = std::max(res, abs(row - Real(cs.points[i].a)));
        amax = std::max(amax, abs(Real(cs.points[i].a)));
    }

    AdditiveSolution sol;
    sol.kernel = kernel.kind;
    sol.omega_or_m = kernel.kind == KernelKind::sinc ? kernel.omega : double(kernel.order);
    sol.period = kernel.kind == KernelKind::dirichlet ? kernel.period : 0.0;
    sol.precision_bits = bits;
    sol.cond = double(hi / lo);
    sol.residual = amax > 0 ? double(res / amax) : double(res);
    sol.residual_warning = sol.residual > 1e-8;
    sol.points.resize(n);
    sol.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sol.points[i] = cs.points[i].t;
        sol.coeffs[i] = double(c[i]);
    }
    return sol;
}

}  // namespace

ConstraintSet make_constraints(std::vector<Constraint> points) {
    if (points.empty()) throw ValidationError("constraint set is empty");
    std::sort(points.begin(), points.end(),
              [](const Constraint& x, const Constraint& y) { return x.t < y.t; });
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!(points[i + 1].t > points[i].t))
            throw ValidationError("constraint abscissae must be pairwise distinct");
    return ConstraintSet{std::move(points)};
}

double dirichlet_kernel(int order, double t) {
    if (order < 0) throw ValidationError("Dirichlet order must be >= 0");
    if (order == 0) return 1.0;
    const double half = std::sin(0.5 * t);
    if (std::abs(half) < 1e-8) {
        double acc = 1.0;
        for (int j = 1; j <= order; ++j) acc += 2.0 * std::cos(j * t);
        return acc / (2 * order + 1);
    }
    return std::sin((order + 0.5) * t) / ((2 * order + 1) * half);
}

AdditiveSolution min_energy_interpolant(const ConstraintSet& constraints,
                                        const KernelSpec& kernel, int precision_bits) {
    if (constraints.points.empty()) throw ValidationError("constraint set is empty");
    if (kernel.kind == KernelKind::sinc && !(kernel.omega > 0.0))
        throw ValidationError("sinc kernel needs a positive bandlimit");
    if (kernel.kind == KernelKind::dirichlet && (kernel.order < 0 || !(kernel.period > 0.0)))
        throw ValidationError("Dirichlet kernel needs order >= 0 and a positive period");
    if (precision_bits <= 53) return solve_at<double>(constraints, kernel, 53);
    if (precision_bits <= 128) return solve_at<float128>(constraints, kernel, 128);
    if (precision_bits <= 256) return solve_at<float256>(constraints, kernel, 256);
    return solve_at<float512>(constraints, kernel, 512);
}

double eval_interpolant(const AdditiveSolution& sol, double t) {
    KernelSpec k;
    k.kind = sol.kernel;
    if (sol.kernel == KernelKind::sinc) {
        k.omega = sol.omega_or_m;
    } else {
        k.order = static_cast<int>(sol.omega_or_m);
        k.period = sol.period;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < sol.points.size(); ++j)
        acc += sol.coeffs[j] * kernel_value<double>(k, t - sol.points[j]);
    return acc;
}

std::string to_json_string(const AdditiveSolution& sol, int indent) {
    nlohmann::json doc;
    doc["kernel"] = sol.kernel == KernelKind::sinc ? "sinc" : "dirichlet";
    doc["omega_or_M"] = sol.omega_or_m;
    doc["coeffs"] = sol.coeffs;
    doc["cond"] = sol.cond;
    doc["residual"] = sol.residual;
    doc["precision_bits"] = sol.precision_bits;
    doc["points"] = sol.points;
    if (sol.kernel == KernelKind::dirichlet) doc["period"] = sol.period;
    return doc.dump(indent);
}

}  // namespace superosc
