#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohmscat {

using cdouble = std::complex<double>;
using cvector = std::vector<cdouble>;

inline constexpr double kPi = 3.14159265358979323846;

/// Raised when a run configuration is physically or numerically inconsistent.
struct ConfigurationError : std::runtime_error {
  explicit ConfigurationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configuration-space point left the periodic grid domain.
struct DomainEscapeError : std::runtime_error {
  explicit DomainEscapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// |psi| fell below the node guard; the velocity field is unreliable here.
struct NodeProximityError : std::runtime_error {
  explicit NodeProximityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Conditioning norm at a detection position is degenerate.
struct CollapseDegenerateError : std::runtime_error {
  explicit CollapseDegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The wave-operator horizon failed to converge within the doubling cap.
struct HorizonError : std::runtime_error {
  explicit HorizonError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Trajectory record too short for the requested asymptotic estimate.
struct InsufficientHorizonError : std::runtime_error {
  explicit InsufficientHorizonError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exit position radius does not match the detector radius.
struct ClassificationError : std::runtime_error {
  explicit ClassificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bohmscat
