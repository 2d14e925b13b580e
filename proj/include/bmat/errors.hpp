#pragma once

#include <stdexcept>
#include <string>

namespace bmat {

/// Shape or value invariant broken by an argument (wrong side, mismatched orders, bad entries).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force or naive routine refused to run because the instance exceeds its size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact computation produced a value that cannot be right (e.g. a non-integral count).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed text input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) +
                             (column ? ", column " + std::to_string(column) : std::string{}) + ": " +
                             what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace bmat
