#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specladder {

// Base of every error thrown by this library. Catching specladder::Error is
// enough to separate library failures from genuine std exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A caller-supplied value is outside the documented domain of an operation.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// A requested matrix/basis dimension cannot be served by the available data.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A spectrum pair violates one of the algebraic identities linking s and a.
// Carries the first offending level index.
class ConsistencyViolation : public Error {
public:
    ConsistencyViolation(const std::string& what_arg, std::size_t k)
        : Error(what_arg), index_(k) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Both roots of the ground-level quadratic are admissible; the caller must
// pick one on physical grounds.
class UnresolvedSign : public Error {
public:
    using Error::Error;
};

// Adjacent levels b_{k+1} + b_k vanish, so the gap recurrence divides by zero.
class DegenerateLadder : public Error {
public:
    using Error::Error;
};

// An iterative eigensolver did not converge.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

// The discretized operator has fewer bound (negative) eigenvalues than requested.
class InsufficientBoundStates : public Error {
public:
    using Error::Error;
};

// A root-finding bracket contains no sign change.
class RootBracketFailure : public Error {
public:
    using Error::Error;
};

// Results are sensitive to the basis truncation beyond the allowed threshold.
class TruncationWarning : public Error {
public:
    using Error::Error;
};

// Two quantities tagged with different energy units were compared.
class UnitMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace specladder
