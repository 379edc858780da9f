// Error types shared across the library. ValidationError means the caller
// handed us an ill-formed request; NumericalError means the computation
// itself failed (singular matrix, non-converged solve, ...). The CLI maps
// them to exit codes 1 and 2.
#pragma once

#include <stdexcept>
#include <string>

namespace superosc {

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Factors whose frequencies share no common fundamental.
struct IncommensurateError : ValidationError {
    using ValidationError::ValidationError;
};

// Gram matrix not positive definite at the working precision.
struct IllConditionedError : NumericalError {
    IllConditionedError(const std::string& what, double cond_estimate)
        : NumericalError(what), cond_estimate(cond_estimate) {}
    double cond_estimate;
};

// Potential with crossing singularities, or an eigensolve on one.
struct SingularPotentialError : NumericalError {
    using NumericalError::NumericalError;
};

struct NonConvergedError : NumericalError {
    NonConvergedError(const std::string& what, double residual)
        : NumericalError(what), residual(residual) {}
    double residual;
};

}  // namespace superosc
