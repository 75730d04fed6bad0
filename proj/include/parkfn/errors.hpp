#pragma once

#include <stdexcept>
#include <string>

namespace parkfn {

// Caller passed malformed input (length mismatch, bad flag, violated precondition).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A multi-shuffle decomposition does not exist for the given v and suffix.
class DecompositionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Asymptotic formula requested outside its regime (c > 0 vs c = 0).
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Work would exceed a configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed: a count that must be integral was not, the
// cycle construction found the wrong number of shifts, and so on. Always a bug.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace parkfn
