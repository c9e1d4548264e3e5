#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlpoly {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result of a truncated series evaluation.
struct EvalResult {
    double value = 0.0;
    /// Truncation (last-term heuristic) plus accumulated rounding bound.
    double abs_error_estimate = 0.0;
    std::size_t terms_used = 0;
};

/// A series could not be summed to the requested accuracy, either because the
/// term budget ran out or because cancellation destroyed the significant digits.
/// The partial sum and its error estimate are carried along.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, EvalResult partial)
        : std::runtime_error(what), partial_(partial) {}

    const EvalResult& partial() const noexcept { return partial_; }

private:
    EvalResult partial_;
};

/// A built-in consistency check between two evaluation routes failed.
class PostconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mlpoly
