#pragma once

#include <stdexcept>
#include <string>

namespace skinsim {

/// Base class for all skinsim errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (negative stretch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument incompatible with the sensor geometry (indent >= body height, ...).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// The deformed surface has closed the optical gap completely.
class SaturationError : public Error {
public:
    using Error::Error;
};

/// Value outside the valid range / image of a model.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent data fed to an operation.
class DataError : public Error {
public:
    using Error::Error;
};

/// Too few (distinct) samples to perform a fit.
class InsufficientDataError : public DataError {
public:
    using DataError::DataError;
};

/// Cross-correlation of a zero-variance series.
class UndefinedCorrelationError : public DataError {
public:
    using DataError::DataError;
};

/// Invalid operation parameter (window size, thresholds, profile spec, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Simulation aborted; carries the first offending sample time.
class SimulationError : public Error {
public:
    SimulationError(const std::string& what, double time_s)
        : Error(what), time_s(time_s) {}
    double time_s;
};

/// Configuration file problem; carries the offending field path.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field(field) {}
    std::string field;
};

/// File I/O failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace skinsim
