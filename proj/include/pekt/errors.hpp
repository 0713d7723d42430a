#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pekt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or table request exceeded a configured size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A precondition on the mathematical input was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series with zero constant term was inverted.
class NonInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An Adams operation would push a term past the weight cap.
class TruncationOverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace pekt
