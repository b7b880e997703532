#pragma once

#include <stdexcept>
#include <string>

namespace zcount {

// Argument outside the documented domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested at a pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// A series, quadrature or refinement loop exhausted its budget before
// meeting the requested tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a primitive character.
struct NotPrimitive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation requires a fundamental discriminant.
struct NotFundamental : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Winding refinement stalled: a zero sits (numerically) on the counting
// rectangle boundary.  Callers perturb T and retry.
struct BoundaryZero : std::runtime_error {
    double residual;
    BoundaryZero(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
};

}  // namespace zcount
