#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gja {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cross-algebra arithmetic is always an error, never a coercion.
struct MixedAlgebraError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

struct UnknownLetterError : ParseError {
    using ParseError::ParseError;
};

struct UnparenthesizedProductChainError : ParseError {
    using ParseError::ParseError;
};

// The algebra has no unit, so the empty word has no value.
struct EmptyWordError : Error {
    using Error::Error;
};

// Rules 0-2 reference the letter a and the order d>c>b>a; they are
// defined only over the built-in deformed-quaternion table.
struct NonAWordError : Error {
    using Error::Error;
};

struct InhomogeneousOperandError : Error {
    using Error::Error;
};

struct UndefinedSignatureError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct BadParityError : Error {
    using Error::Error;
};

struct BadIndexError : Error {
    using Error::Error;
};

struct UnknownElementError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace gja
