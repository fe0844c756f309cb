#pragma once

#include <stdexcept>
#include <string>

namespace nhsw {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an interface contract (field/grid length mismatch, bad
/// parameter range, ...).
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// Query outside the declared domain of a sampled object.
class OutOfDomainError : public Error {
public:
  using Error::Error;
};

/// Water column too thin to carry a vertical profile.
class DegenerateColumnError : public Error {
public:
  using Error::Error;
};

/// Direct linear solve hit a vanishing pivot.
class SolverFailure : public Error {
public:
  SolverFailure(const std::string& what, int pivot_index)
      : Error(what), pivot_index(pivot_index) {}
  int pivot_index;
};

/// A pressure problem was assembled across dry cells.
class WetIntervalViolation : public Error {
public:
  using Error::Error;
};

/// ODE integration produced a non-finite state.
class IntegrationFailure : public Error {
public:
  IntegrationFailure(const std::string& what, double t_fail)
      : Error(what), t_fail(t_fail) {}
  double t_fail;
};

/// The stationary march reached a point where the depth equation degenerates.
class TranscriticalError : public Error {
public:
  TranscriticalError(const std::string& what, double x_fail)
      : Error(what), x_fail(x_fail) {}
  double x_fail;
};

/// A quantity that must stay positive did not.
class PositivityFailure : public Error {
public:
  PositivityFailure(const std::string& what, double x_fail)
      : Error(what), x_fail(x_fail) {}
  double x_fail;
};

/// Requested time step exceeds the admissible one.
class StepRejected : public Error {
public:
  StepRejected(const std::string& what, double dt_admissible)
      : Error(what), dt_admissible(dt_admissible) {}
  double dt_admissible;
};

/// Malformed configuration or input file.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace nhsw
