#ifndef HEDONICA_ERRORS_HPP
#define HEDONICA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hedonica {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad index, invalid
/// partition, player not in coalition, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A solver precondition on the game does not hold (e.g. strictness for
/// serial dictatorship, symmetry for local search).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive computation would exceed its configured size limit or budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hedonica

#endif  // HEDONICA_ERRORS_HPP
