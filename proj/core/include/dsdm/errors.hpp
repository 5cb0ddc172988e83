#pragma once

#include <stdexcept>
#include <string>

namespace dsdm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter, state, or configuration value violates its contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A jump map or transition was requested from a mode that does not permit it.
class InvalidTransition : public Error {
 public:
  using Error::Error;
};

/// Controller phase and plant mode disagree; indicates a desynchronized loop.
class InternalFault : public Error {
 public:
  using Error::Error;
};

/// Scenario or parameter file could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = 0)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ":" + std::to_string(column) : "") + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Integration produced a non-finite state.
class SimulationDiverged : public Error {
 public:
  explicit SimulationDiverged(const std::string& message, double time = 0.0)
      : Error(message), time_(time) {}

  /// Simulation time of the last valid state.
  double time() const { return time_; }

 private:
  double time_;
};

}  // namespace dsdm
