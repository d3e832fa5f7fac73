#pragma once

#include <stdexcept>
#include <string>

namespace cvt {

/// Base class for all cvteleport errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter or result left its mathematical domain (negative squeezing,
/// fidelity outside [0, 1 + 1e-9], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Closed-form fidelity requested outside the (phi_res, theta) = (pi, 0)
/// convention it is derived for.
class PhaseConventionError : public Error {
public:
    using Error::Error;
};

/// A numeric oracle (quadrature or finite differences) failed its
/// self-consistency check.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Scenario file or CLI configuration is invalid.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A requested observable could not be computed; wraps propagated
/// oracle failures with sweep-point context.
class ComputeError : public Error {
public:
    using Error::Error;
};

/// Output file could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace cvt
