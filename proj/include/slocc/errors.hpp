#pragma once

#include <stdexcept>
#include <string>

namespace slocc {

/// Incompatible tensor/operator dimensions.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A value failed a construction-time invariant (hermiticity, positivity, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Unparseable or unknown state identifier.
class StateIdError : public std::invalid_argument {
public:
    explicit StateIdError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operator tuple annihilated the state; the overlap ratio is undefined.
class DegenerateOperatorError : public std::runtime_error {
public:
    explicit DegenerateOperatorError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem size exceeds the configured solver budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slocc
