#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptrace {

// Input that violates a documented precondition (bad weights, ring
// mismatch, unknown du Val label, ...).
class ValueError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed the caller-supplied matrix-size budget.
// Surfaced verbatim by the CLI with exit code 3.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t required, std::size_t budget)
        : std::runtime_error(what), required_bytes(required), budget_bytes(budget) {}
    std::size_t required_bytes;
    std::size_t budget_bytes;
};

// Syntax error in the polynomial expression grammar; position is a
// 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

} // namespace ptrace
