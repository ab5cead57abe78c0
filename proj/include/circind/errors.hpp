#pragma once

#include <stdexcept>
#include <string>

namespace circind {

// Bad user input: invalid order, out-of-range distance or vertex index,
// non-unit multiplier, malformed check parameters. CLI exit status 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured capacity bound (oracle order, class
// enumeration cap, word width). CLI exit status 1.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic would overflow a 64-bit result. Counts are never
// allowed to wrap silently. CLI exit status 1.
class ArithmeticError : public std::runtime_error {
public:
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed (engine disagreement, inexact
// division in the rooted engine). Always a bug, never bad input.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace circind
