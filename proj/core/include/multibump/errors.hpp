#pragma once

#include <stdexcept>
#include <string>

namespace multibump {

// Base for all failures raised by the library. Config errors map to CLI
// exit code 2, everything else to 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigInvalid : Error {
  explicit ConfigInvalid(const std::string& msg) : Error(msg) {}
};

// quadrature
struct QuadratureNotConverged : Error {
  explicit QuadratureNotConverged(const std::string& msg) : Error(msg) {}
};

// toda
struct StepTooLarge : Error {
  explicit StepTooLarge(const std::string& msg) : Error(msg) {}
};
struct OrderingViolated : Error {
  explicit OrderingViolated(const std::string& msg) : Error(msg) {}
};
struct WindowTooShort : Error {
  explicit WindowTooShort(const std::string& msg) : Error(msg) {}
};
struct FitUnresolved : Error {
  explicit FitUnresolved(const std::string& msg) : Error(msg) {}
};

// dancer
struct ContinuationStalled : Error {
  explicit ContinuationStalled(const std::string& msg) : Error(msg) {}
};
struct BifurcationNotFound : Error {
  explicit BifurcationNotFound(const std::string& msg) : Error(msg) {}
};

// ansatz
struct GridTooSmall : Error {
  explicit GridTooSmall(const std::string& msg) : Error(msg) {}
};

// linear
struct SolverSingular : Error {
  explicit SolverSingular(const std::string& msg) : Error(msg) {}
};
struct ConstraintViolation : Error {
  explicit ConstraintViolation(const std::string& msg) : Error(msg) {}
};

// reduction
struct ResonantRHS : Error {
  explicit ResonantRHS(const std::string& msg) : Error(msg) {}
};
struct FundamentalMatrixIllConditioned : Error {
  explicit FundamentalMatrixIllConditioned(const std::string& msg) : Error(msg) {}
};
struct OrthogonalityViolated : Error {
  explicit OrthogonalityViolated(const std::string& msg) : Error(msg) {}
};
struct DegenerateDenominator : Error {
  explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};
struct ContractionFailed : Error {
  explicit ContractionFailed(const std::string& msg) : Error(msg) {}
};

// corrector
struct Diverged : Error {
  explicit Diverged(const std::string& msg) : Error(msg) {}
};
struct PositivityLost : Error {
  explicit PositivityLost(const std::string& msg) : Error(msg) {}
};
struct BoundaryContaminated : Error {
  explicit BoundaryContaminated(const std::string& msg) : Error(msg) {}
};

}  // namespace multibump
