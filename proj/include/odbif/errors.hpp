#pragma once

#include <stdexcept>
#include <string>

namespace odbif {

/// Argument outside the mathematical domain of a routine (x < 0, nu <= -1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid configuration or precondition violation on integer/structural inputs.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative or bracketing numerical procedure failed. Carries the last
/// bracket so callers can report where the search went wrong.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double lo = 0.0, double hi = 0.0)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}

    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

} // namespace odbif
