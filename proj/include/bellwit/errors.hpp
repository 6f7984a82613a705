#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellwit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or vector-space dimension mismatch between arguments.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Problem size exceeds a hard capacity cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Numerical breakdown (non-PSD input, negative radicand, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Requested rank lower than the effective rank of a Gram matrix.
class RankError : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed; carries a 1-based location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

}  // namespace bellwit
