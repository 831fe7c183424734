#ifndef CTX_ERRORS_HPP
#define CTX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctx {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad labels, broken invariants, schema errors).
struct ValidationError : Error {
    using Error::Error;
};

/// A configured size cap was exceeded (global-section enumeration, graph size).
struct CapError : Error {
    using Error::Error;
};

/// An iterative solver did not reach its target residual within the iteration cap.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double residual_, int iterations_)
        : Error(msg), residual(residual_), iterations(iterations_) {}
    double residual;
    int iterations;
};

}  // namespace ctx

#endif  // CTX_ERRORS_HPP
