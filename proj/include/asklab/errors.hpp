#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asklab {

// Structurally invalid input: bad shapes, bad parameters, malformed files.
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct ShapeMismatchError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotAlternatingError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotNilpotentShapeError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotIndependentError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// Commutator bracket leaves the integer span of the basis.
struct NotClosedError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct CharTooSmallError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct BadDenominatorError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct InsufficientSamplesError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotAnActionError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// An enumeration would exceed the configured point budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division failed where integrality is forced; indicates a bug, not bad input.
struct NonIntegralError : std::logic_error {
    using std::logic_error::logic_error;
};

// A user-supplied decomposition fails its defining equation at some q.
struct DecompositionInvalidError : std::runtime_error {
    DecompositionInvalidError(const std::string& msg, std::uint64_t q_value)
        : std::runtime_error(msg), q(q_value) {}
    std::uint64_t q;
};

// Enumeration budgets, counted in points visited (never wall time).
struct Budget {
    std::uint64_t points = 10'000'000;        // per brute-force enumeration call
    std::uint64_t naive_class_cap = 1 << 14;  // max |G| for naive conjugacy counting
    std::uint64_t closure_cap = 1'000'000;    // max elements of a matrix-group closure
};

}  // namespace asklab
