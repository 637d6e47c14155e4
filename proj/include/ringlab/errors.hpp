#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested construction would exceed the configured ring-size cap.
struct SizeCapExceeded : Error {
    using Error::Error;
};

/// Invalid argument: non-prime p, out-of-range parameter, zero exponent, ...
struct ValidationError : Error {
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

/// The exponential period exceeds the configured census bound; callers may
/// report a partial result.
struct BoundExceeded : Error {
    using Error::Error;
};

/// Ring-spec syntax error with the offending position in the input string.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

} // namespace ringlab
