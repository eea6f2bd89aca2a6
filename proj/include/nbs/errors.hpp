#pragma once

#include <stdexcept>
#include <string>

namespace nbs {

// Caller supplied an argument outside the documented domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation could not meet its accuracy target.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The truncated basis cannot hold the requested state to the requested
// tail mass.  Carries the mass that was actually achieved.
class TruncationError : public NumericalError {
public:
    TruncationError(const std::string& what, double achieved_tail)
        : NumericalError(what), achieved_tail_(achieved_tail) {}

    double achieved_tail() const noexcept { return achieved_tail_; }

private:
    double achieved_tail_;
};

// A series did not converge before its term cap.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double achieved_bound)
        : NumericalError(what), achieved_bound_(achieved_bound) {}

    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

}  // namespace nbs
