#pragma once

#include <stdexcept>
#include <string>

namespace hjj {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed dimensions, asymmetric structure constants, non-square matrices.
struct InvalidInput : Error {
    using Error::Error;
};

struct ContainmentViolation : Error {
    using Error::Error;
};

struct NotACochain : Error {
    using Error::Error;
};

struct InvalidCocycle : Error {
    using Error::Error;
};

struct InvalidRepresentation : Error {
    using Error::Error;
};

/// A polynomial system outside the shapes the elimination solver handles.
struct UnsupportedSystem : Error {
    using Error::Error;
};

struct PreconditionFailure : Error {
    using Error::Error;
};

struct DegenerateForm : Error {
    using Error::Error;
};

struct UnknownEntry : Error {
    using Error::Error;
};

struct MissingParameter : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

struct SchemaError : Error {
    using Error::Error;
};

}  // namespace hjj
