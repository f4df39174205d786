#pragma once

#include <stdexcept>
#include <string>

namespace bcov {

// Domain failure: invalid input data, mismatched degrees, failed preconditions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text or JSON input; carries a position when one is known.
struct ParseError : Error {
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ")"
                         : what),
          line(line),
          column(column) {}
    int line = 0;
    int column = 0;
};

}  // namespace bcov
