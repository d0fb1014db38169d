#pragma once

#include <stdexcept>
#include <string>

namespace sppkit {

// Input could not be parsed. `line` is 1-based; 0 when no line applies
// (e.g. JSON input or a single-token context).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

// Proof search ran out of its step budget. Distinct from "not derivable".
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(std::uint64_t budget)
        : std::runtime_error("proof search exceeded step budget of " + std::to_string(budget)),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

class NotAnInvariantError : public std::runtime_error {
public:
    explicit NotAnInvariantError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace sppkit
