// Factor and product-signal representations.
//
// A factor is a single bandlimited building block, sine or sinc, with its
// own bandlimit omega (rad per unit t), time shift eps and overall sign:
//
//   sine:  sign * sin(omega * (t - eps))
//   sinc:  sign * sin(omega * (t - eps)) / (omega * (t - eps)),  value sign at t = eps
//
// A product signal S(t) = prod_i b_i(t) has bandlimit omega_total equal to
// the sum of the factor bandlimits, and inherits every real zero of every
// factor.
#pragma once

#include <string>
#include <vector>

#include "superosc/errors.hpp"

namespace superosc {

enum class FactorKind { sine, sinc };

struct FactorSpec {
    FactorKind kind = FactorKind::sine;
    double omega = 1.0;  // bandlimit, > 0
    double eps = 0.0;    // time shift
    int sign = +1;       // +1 or -1
};

struct ProductSignalSpec {
    std::vector<FactorSpec> factors;  // nonempty, evaluated in declared order
    double omega_total = 0.0;         // = sum of factor bandlimits
};

// Validates factors and fills in omega_total.
ProductSignalSpec make_product(std::vector<FactorSpec> factors);

double eval_factor(const FactorSpec& f, double t);
double eval_product(const ProductSignalSpec& s, double t);

// Sum of the factor bandlimits.
double product_bandlimit(const ProductSignalSpec& s);

// JSON wire format:
//   {"factors":[{"kind":"sine","omega":...,"eps":...,"sign":1},...],"omega_total":...}
// Factors are canonicalized (sorted by (omega, eps, kind, sign)) on
// serialization so equal specs produce identical documents.
std::string to_json_string(const ProductSignalSpec& s, int indent = -1);
ProductSignalSpec product_from_json_string(const std::string& text);

}  // namespace superosc
