#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class EmptyPolyhedron : public Error {
public:
    EmptyPolyhedron() : Error("empty polyhedron") {}
};

class InfeasiblePoint : public Error {
public:
    InfeasiblePoint() : Error("infeasible point") {}
};

class NotSeparable : public Error {
public:
    NotSeparable() : Error("not separable") {}
};

class NotEfficient : public Error {
public:
    NotEfficient() : Error("not efficient") {}
};

class EndpointNotEfficient : public Error {
public:
    EndpointNotEfficient() : Error("endpoint not efficient") {}
};

class NoArgmin : public Error {
public:
    NoArgmin() : Error("no argmin") {}
};

class UnsolvableOnSegment : public Error {
public:
    UnsolvableOnSegment() : Error("unsolvable on segment") {}
};

class FaceLimitExceeded : public Error {
public:
    explicit FaceLimitExceeded(std::size_t limit)
        : Error("face enumeration exceeded limit of " + std::to_string(limit)) {}
};

/// Raised when an internal postcondition fails; indicates a library bug.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what)
        : Error("invariant violation: " + what) {}
};

}  // namespace gpoly
