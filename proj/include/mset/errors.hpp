#ifndef MSET_ERRORS_HPP
#define MSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mset {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand lengths or ambient dimensions do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value lies outside the domain a function or operation was declared on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A kernel was evaluated at (or too close to) a singular point,
/// e.g. a coincident pair under an inverse-power or logarithmic kernel.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A scalar parameter lies outside the range the operation is defined for.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or text; the message carries line/token positions.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace mset

#endif  // MSET_ERRORS_HPP
