#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onegen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero, mixed fields, invalid reduction mod p.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Precondition violated by the caller (sizes, ranges, shapes).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Carries a 1-based line and column (0 when unknown).
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), message_(what), line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without the position prefix.
    const std::string &message() const noexcept { return message_; }

private:
    static std::string format(const std::string &what, std::size_t line, std::size_t column)
    {
        if (line == 0)
            return "column " + std::to_string(column) + ": " + what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A computation hit its configured budget. Callers report "inconclusive".
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace onegen
