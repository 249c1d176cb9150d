/**
 * Exception types shared across the library.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dhomology {

/// Raised when an argument lies outside the domain an operation accepts.
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input; `line()` is 1-based.
class ParseError : public DomainError
{
public:
    ParseError(std::size_t line, const std::string& what)
        : DomainError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Internal invariant violated (a bug or inconsistent inputs between stages).
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace dhomology
