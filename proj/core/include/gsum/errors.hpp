#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A precondition on the shape or size of an argument was violated.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// The result cannot be represented in double precision.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An iterative algorithm did not converge.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    /// Index of the eigenvalue (or iterate) that failed.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Evaluation at (or too close to) a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A summand returned a non-finite value.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double k) : Error(what), k_(k) {}

    /// Pseudo-index at which the summand was evaluated.
    double k() const noexcept { return k_; }

private:
    double k_;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class CorruptCache : public Error {
public:
    using Error::Error;
};

} // namespace gsum
