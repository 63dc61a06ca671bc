#ifndef STEENROD_ERRORS_HPP
#define STEENROD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steenrod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violation of a mathematical precondition (CLI exit code 3).
class DomainError : public Error {
public:
    using Error::Error;
};

class NonPrimeError : public DomainError {
public:
    explicit NonPrimeError(long long p)
        : DomainError("not a prime: " + std::to_string(p)) {}
};

class ReducibleModulusError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisionByZeroError : public DomainError {
public:
    DivisionByZeroError() : DomainError("division by zero field element") {}
};

class FieldMismatchError : public DomainError {
public:
    FieldMismatchError() : DomainError("operands belong to different fields") {}
    using DomainError::DomainError;
};

class ShapeMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

class IndexRangeError : public DomainError {
public:
    using DomainError::DomainError;
};

class NotInadmissibleError : public DomainError {
public:
    NotInadmissibleError(long long a, long long b)
        : DomainError("P^" + std::to_string(a) + " P^" + std::to_string(b) +
                      " is already admissible") {}
};

class NotAdmissibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed input text (CLI exit code 2). Carries the byte offset of the
/// offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          pos_(position) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class FieldLiteralError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace steenrod

#endif
