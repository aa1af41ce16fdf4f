#pragma once

#include <stdexcept>
#include <string>

namespace fracivp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematical domain violation (gamma pole, log of a non-positive value, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Series / iteration budget exhausted before the requested accuracy was met.
struct BudgetError : Error {
    using Error::Error;
};

/// Expression syntax error with the byte offset of the offending token.
struct ParseError : Error {
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

/// Problem-file validation failure, names the offending field.
struct ValidationError : Error {
    ValidationError(std::string field, const std::string& what)
        : Error("field '" + field + "': " + what), field(std::move(field)) {}
    std::string field;
};

/// Picard iteration did not reach tolerance within max_iter sweeps.
struct ConvergenceError : Error {
    ConvergenceError(int iterations, double last_update_norm)
        : Error("no convergence after " + std::to_string(iterations) +
                " iterations; last update norm " + std::to_string(last_update_norm)),
          iterations(iterations),
          last_update_norm(last_update_norm) {}
    int iterations;
    double last_update_norm;
};

}  // namespace fracivp
