#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nervepool {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid input (duplicate vertices, bad weights, shape mismatch, ...).
struct MalformedInputError : Error {
    using Error::Error;
};

// Requested dimension outside 0..dim(K).
struct DimensionError : Error {
    using Error::Error;
};

// Lookup of a vertex or simplex that is not part of the complex.
struct NotFoundError : Error {
    using Error::Error;
};

// A vertex of the complex is not assigned to any cluster.
struct IncompleteCoverError : Error {
    using Error::Error;
};

// A block-row of the assignment matrix sums to zero and cannot be normalized.
struct UncoveredSimplexError : Error {
    using Error::Error;
};

// Text input error carrying the 1-based line number.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& message)
        : Error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
    std::size_t line;
};

}  // namespace nervepool
