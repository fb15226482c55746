#pragma once

#include <stdexcept>
#include <string>

namespace hfsurv {

// Base class for hard contract violations. Soft outcomes (no detection, no
// association, rejected initial orbit) are expressed as std::optional /
// status enums instead, so a throw always means the caller broke a
// precondition or the computation cannot proceed.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Scenario / configuration content is invalid (bad field, missing key, value
// out of range). CLI maps this to exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Propagated trajectory reached the Earth's surface.
class ImpactError : public Error {
public:
    explicit ImpactError(const std::string& what) : Error(what) {}
};

// Doppler fold factor cannot be resolved consistently across a track.
class AmbiguityError : public Error {
public:
    explicit AmbiguityError(const std::string& what) : Error(what) {}
};

// Ray does not penetrate the ionosphere (reflection below the requested
// range) or leaves the valid integration domain.
class RaytraceError : public Error {
public:
    explicit RaytraceError(const std::string& what) : Error(what) {}
};

// Estimation problem is numerically degenerate (singular normal matrix,
// insufficient measurements for the requested solve).
class EstimationError : public Error {
public:
    explicit EstimationError(const std::string& what) : Error(what) {}
};

} // namespace hfsurv
