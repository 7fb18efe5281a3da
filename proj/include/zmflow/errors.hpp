// errors.hpp -- exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace zm {

/// Two fields live on different grids.
struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated (bounds, mean-zero, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad user-facing parameter (exponent range, model name, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Field data is non-finite or otherwise unusable.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Querying an object in a state that cannot answer (empty accumulator, ...).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Iterative solve did not reach tolerance; carries the last residual.
struct ConvergenceError : std::runtime_error {
    double last_residual;
    int iterations;
    ConvergenceError(const std::string& what, double residual, int iters)
        : std::runtime_error(what), last_residual(residual), iterations(iters) {}
};

/// A time step could not be taken (CFL violation and similar).
struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A run-level stability invariant was breached (maximum principle, ...).
struct StabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zm
