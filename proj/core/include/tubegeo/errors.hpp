#pragma once

#include <stdexcept>
#include <string>

namespace tubegeo {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Point outside every chart of the manifold.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Metric failed the SPD contract; never regularized, always fatal.
struct DegenerateMetric : Error {
  explicit DegenerateMetric(const std::string& what) : Error(what) {}
};

struct DifferentiationFailure : Error {
  explicit DifferentiationFailure(const std::string& what) : Error(what) {}
};

struct NotUnitVector : Error {
  explicit NotUnitVector(const std::string& what) : Error(what) {}
};

// Trajectory left all chart domains during integration.
struct ChartExit : Error {
  explicit ChartExit(const std::string& what) : Error(what) {}
};

// Step-halving error estimate exceeded tolerance.
struct StepFailure : Error {
  explicit StepFailure(const std::string& what) : Error(what) {}
};

struct ImmersionFailure : Error {
  explicit ImmersionFailure(const std::string& what) : Error(what) {}
};

struct SingularJacobian : Error {
  explicit SingularJacobian(const std::string& what) : Error(what) {}
};

struct FitFailure : Error {
  explicit FitFailure(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace tubegeo
