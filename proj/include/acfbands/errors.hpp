#ifndef ACFBANDS_ERRORS_HPP
#define ACFBANDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acfbands {

/// Base class for all library errors. Data/contract violations derive from
/// Error directly; failures of a numerical procedure derive from
/// NumericalError so callers (and the CLI exit-code mapping) can tell the
/// two classes apart.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InvalidLag : public Error {
public:
    using Error::Error;
};

class DegenerateSeries : public Error {
public:
    using Error::Error;
};

class NonStationary : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class InsufficientLength : public Error {
public:
    using Error::Error;
};

class ZeroVariance : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class Degenerate : public Error {
public:
    using Error::Error;
};

/// Numerical-procedure failures (CLI exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

class TruncationFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NumericalBreakdown : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularSigmaX : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace acfbands

#endif
