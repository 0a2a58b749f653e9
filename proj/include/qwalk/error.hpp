#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector or coin that should have unit norm does not.
class NormViolation : public Error {
public:
    using Error::Error;
};

/// A coin with a = 0 or b = 0 was passed where both must be non-zero.
class DegenerateCoin : public Error {
public:
    using Error::Error;
};

/// Polar parameters (s, t) outside their admissible range.
class ParamViolation : public Error {
public:
    using Error::Error;
};

/// Requested work exceeds a configured ceiling.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// The coefficient and contour-integral sides of a convolution disagree.
class QuadratureDivergence : public Error {
public:
    using Error::Error;
};

/// A quadrature did not reach its accuracy target.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace qwalk
