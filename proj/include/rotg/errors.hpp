#pragma once

#include <stdexcept>
#include <string>

namespace rotg {

// Raised by the mgf reader; `line` is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// An operation was asked to exceed its documented size limits.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what_) : std::runtime_error(what_) {}
};

// A structural invariant that the input was supposed to guarantee failed
// mid-operation (e.g. the two outside neighbors of a 2-cut coincide).
struct InternalContradictionError : std::logic_error {
    explicit InternalContradictionError(const std::string& what_) : std::logic_error(what_) {}
};

struct NoSpanningTreeError : std::invalid_argument {
    explicit NoSpanningTreeError(const std::string& what_) : std::invalid_argument(what_) {}
};

}  // namespace rotg
