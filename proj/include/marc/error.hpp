#pragma once

#include <stdexcept>
#include <string>

namespace marc {

// Raised when raw channel parameters violate the model constraints.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A parameter lies outside the feasible set of an operation (gamma outside
// Gamma_OB, an (alpha, beta) pair outside Gamma, an unmet rule constraint, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed-form evaluation produced a value that can only come from a
// formula bug or from an infeasible input slipping past validation.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation only defined for a particular number of users (e.g. 2-user polygons).
class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace marc
