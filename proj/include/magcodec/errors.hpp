#pragma once

#include <stdexcept>
#include <string>

namespace magcodec {

// Exit-code mapping used by the CLI: validation 2, size cap 3, I/O 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

// Raised when a construction would exceed the configured bitset cap.
struct SizeCapError : Error {
    using Error::Error;
};

// Malformed or truncated bit streams.
struct DecodeError : ValidationError {
    using ValidationError::ValidationError;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace magcodec
