#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbn {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

class NotStarLimiting : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

/// A search exceeded its configured node, state or candidate budget.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

/// Results contradict each other (e.g. a star-limiting TBN with no saturated configuration).
class InternalError : public Error
{
public:
    using Error::Error;
};

class ParseError : public InvalidArgument
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : InvalidArgument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_{line}, column_{column}
    {
    }

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace tbn
