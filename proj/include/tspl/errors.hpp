#pragma once

#include <stdexcept>
#include <string>

namespace tspl {

/// Base class of all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A time, index, or bound outside the time scale or the domain of an
/// operation (t not in T, derivative requested outside T^k, a > b, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Violation of the model's structural hypotheses at evaluation time
/// (nonpositive resistivity, nonlocal denominator not positive, ...).
struct HypothesisError : Error {
    using Error::Error;
};

/// A parameter value outside its admissible range. `location` is the
/// JSON-pointer path of the offending field in the problem document.
struct ValidationError : Error {
    ValidationError(const std::string& message, std::string where)
        : Error(where.empty() ? message : where + ": " + message),
          location(std::move(where)) {}

    std::string location;
};

/// Problem-file syntax or schema errors (unreadable file, malformed JSON,
/// missing or mistyped fields, unknown kinds).
struct ParseError : Error {
    explicit ParseError(const std::string& message, std::string where = {})
        : Error(where.empty() ? message : where + ": " + message),
          location(std::move(where)) {}

    std::string location;
};

/// Iteration blow-up: NaN or norm overflow at `iteration`.
struct DivergenceError : Error {
    DivergenceError(const std::string& message, int iter)
        : Error(message + " (iteration " + std::to_string(iter) + ")"),
          iteration(iter) {}

    int iteration;
};

} // namespace tspl
