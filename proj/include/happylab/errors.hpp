#pragma once

#include <stdexcept>
#include <string>

namespace happylab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: instance/labeling/hypergraph invariants, file parsing,
// parameter validation. CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

struct EmptyLabelClass : ValidationError {
    int label;
    explicit EmptyLabelClass(int i)
        : ValidationError("label " + std::to_string(i) + " has no pre-colored vertex"), label(i) {}
};

struct BadEdge : ValidationError {
    using ValidationError::ValidationError;
};

struct NegativeWeight : ValidationError {
    using ValidationError::ValidationError;
};

struct PrecolorViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct OutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

struct InvariantViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct ThetaOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

struct BadParameters : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidHypergraph : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

// Enumeration limits (exit code 3).
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what) : Error(what) {}
    BudgetExceeded(int uncolored, int k)
        : Error("exhaustive search over " + std::to_string(uncolored) + " uncolored vertices with " +
                std::to_string(k) + " labels exceeds the enumeration budget") {}
};

struct SolverFailure : Error {
    using Error::Error;
};

}  // namespace happylab
