#pragma once

#include <stdexcept>
#include <string>

namespace dt {

// Iterative routine exhausted its budget (series cap, root-finder cap, ...).
class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Root bracket endpoints do not straddle a sign change.
class InvalidBracketError : public std::invalid_argument {
public:
    explicit InvalidBracketError(const std::string& what) : std::invalid_argument(what) {}
};

// Input text could not be parsed; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace dt
