// Conventional additive constructions used for comparison: minimum-energy
// bandlimited interpolation through prescribed points via the kernel Gram
// system G c = a, with K the sinc kernel (square-integrable case) or the
// Dirichlet kernel (periodic case). The Gram matrix turns ill-conditioned
// as the prescribed points crowd together, which is the reason the solver
// carries a selectable working precision.
#pragma once

#include <string>
#include <vector>

#include "superosc/errors.hpp"

namespace superosc {

struct Constraint {
    double t = 0.0;  // abscissa
    double a = 0.0;  // prescribed amplitude
};

struct ConstraintSet {
    std::vector<Constraint> points;  // strictly increasing t
};

// Validates pairwise-distinct abscissae and sorts them ascending.
ConstraintSet make_constraints(std::vector<Constraint> points);

enum class KernelKind { sinc, dirichlet };

struct KernelSpec {
    KernelKind kind = KernelKind::sinc;
    double omega = 1.0;    // sinc: bandlimit
    int order = 0;         // dirichlet: M
    double period = 6.283185307179586476925286766559;  // dirichlet: T
};

struct AdditiveSolution {
    KernelKind kernel = KernelKind::sinc;
    double omega_or_m = 0.0;
    double period = 0.0;  // dirichlet only
    std::vector<double> points;
    std::vector<double> coeffs;
    double cond = 1.0;      // 2-norm condition number of the Gram matrix
    double residual = 0.0;  // max |G c - a| / max |a| at the working precision
    int precision_bits = 53;
    bool residual_warning = false;
};

// D_M(t) = (1/(2M+1)) sum_{k=-M..M} e^{ikt}
//        = sin((M + 1/2) t) / ((2M+1) sin(t/2)),   D_M(2 pi Z) = 1.
double dirichlet_kernel(int order, double t);

// Solves the Gram system at the requested working precision (53 native, or
// a 128/256/512-bit mantissa ladder; the actual rung is reported). Throws
// IllConditionedError when the Gram matrix is not positive definite at
// that precision. A residual above 1e-8 * max|a| only sets
// residual_warning.
AdditiveSolution min_energy_interpolant(const ConstraintSet& constraints,
                                        const KernelSpec& kernel, int precision_bits = 53);

// sum_j c_j K(t - t_j)
double eval_interpolant(const AdditiveSolution& sol, double t);

// {"kernel","omega_or_M","coeffs","cond","residual","precision_bits",...}
std::string to_json_string(const AdditiveSolution& sol, int indent = -1);

}  // namespace superosc
