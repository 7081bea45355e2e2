#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssc {

/// Shape violation in a matrix/vector operation or in a system definition.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Carries the 1-based line number of the offending
/// line; what() already includes it.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// A well-formed request with no valid answer: infeasible termination, an
/// exceeded enumeration cap, or an empty feasible set.
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace ssc
