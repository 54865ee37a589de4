#pragma once

#include <stdexcept>
#include <string>

namespace hyplam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Coincident or otherwise degenerate geometric input.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// An iterative search hit its iteration cap before reaching tolerance.
class IterationLimitError : public Error {
public:
    using Error::Error;
};

/// A root was requested outside the parameter range where it exists.
class NoRootError : public Error {
public:
    using Error::Error;
};

/// Opposite-side distances that cannot come from a Lambert quadrilateral.
class InconsistentQuadrilateralError : public Error {
public:
    using Error::Error;
};

/// Ideal vertices that are not in the assumed cyclic order.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// Unknown sweep target or malformed sweep parameters.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// A JSON document that does not match the report schema.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace hyplam
