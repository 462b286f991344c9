#pragma once

#include <stdexcept>
#include <string>

namespace samara {

/// Base class for every error raised by the samara library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or argument lies outside the domain an operation accepts.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed external input (config files, measurement CSVs).
class InputError : public Error {
public:
    using Error::Error;
};

/// An iterative solve did not converge or had no admissible root.
/// Carries the last residuals seen so callers can report them.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual_a = 0.0, double residual_b = 0.0)
        : Error(what), residual_a_(residual_a), residual_b_(residual_b) {}

    double residual_a() const noexcept { return residual_a_; }
    double residual_b() const noexcept { return residual_b_; }

private:
    double residual_a_;
    double residual_b_;
};

/// Hover trim has no root: the propellers cannot drive the wings at this voltage.
class TrimError : public SolverError {
public:
    using SolverError::SolverError;
};

/// Calibration data cannot determine the coefficients.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace samara
