#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- input shape ----

struct DisconnectedGraphError : Error {
    using Error::Error;
};

struct InvalidPartitionError : Error {
    using Error::Error;
};

struct InvalidBoundsError : Error {
    using Error::Error;
};

struct UnmappedVertexError : Error {
    using Error::Error;
};

struct InvalidTreeError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// ---- family recognition ----

struct NotThresholdError : Error {
    using Error::Error;
};

struct NotSplitMatchingError : Error {
    using Error::Error;
};

struct NotSplitAntimatchingError : Error {
    using Error::Error;
};

struct UnsupportedComponentError : Error {
    using Error::Error;
};

struct OrderViolationError : Error {
    using Error::Error;
};

// ---- oracle ----

struct CapExceededError : Error {
    using Error::Error;
};

struct CaseSplitCapError : Error {
    using Error::Error;
};

struct LabelMismatchError : Error {
    using Error::Error;
};

}  // namespace pcg
