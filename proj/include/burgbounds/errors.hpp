#pragma once

#include <stdexcept>
#include <string>

namespace burgbounds {

// Error categories, mirrored one-to-one by the C API status codes.
enum class ErrorKind {
    invalid_argument,
    validation,
    parse,
    io,
    domain,
    lookup,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error(ErrorKind::invalid_argument, message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message)
        : Error(ErrorKind::parse, message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message)
        : Error(ErrorKind::io, message) {}
};

// Value outside the mathematical domain of an operation, e.g. dividing by
// an interval that reaches zero.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message)
        : Error(ErrorKind::domain, message) {}
};

class LookupError : public Error {
public:
    explicit LookupError(const std::string& message)
        : Error(ErrorKind::lookup, message) {}
};

}  // namespace burgbounds
