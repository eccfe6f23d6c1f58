#ifndef VOIDCRACK_ERRORS_HPP
#define VOIDCRACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace voidcrack {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A physical constant violates its admissibility condition.  The message
/// names the offending constant.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// The derived coupling number N falls outside [0, 1).
class CouplingError : public Error {
public:
    explicit CouplingError(const std::string& what) : Error(what) {}
};

/// An operation was called in a way its contract forbids (bad mesh size,
/// too few extrapolation samples, ...).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

/// LU elimination met a numerically singular pivot.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, int pivot_index)
        : Error(what), pivot_index_(pivot_index) {}
    int pivot_index() const { return pivot_index_; }

private:
    int pivot_index_;
};

/// A quadrature or extrapolation failed to reach the requested tolerance.
/// Carries the error estimate that was actually achieved.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

}  // namespace voidcrack

#endif
