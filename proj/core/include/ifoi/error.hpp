#pragma once

#include <stdexcept>
#include <string>

namespace ifoi {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative solve stopped without meeting its tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double last_norm, int iterations)
        : std::runtime_error(what), last_norm_(last_norm), iterations_(iterations) {}

    double last_norm() const noexcept { return last_norm_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_norm_;
    int iterations_;
};

/// Iterates left the admissible magnitude range.
class DivergenceError : public NonConvergenceError {
public:
    using NonConvergenceError::NonConvergenceError;
};

/// A linear system or shooting combination has a (numerically) vanishing pivot.
class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ifoi
