#pragma once

#include <stdexcept>
#include <string>

namespace tricap {

/// Base class for all tricap runtime errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A physical parameter failed validation; `field` names the offender.
struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& f)
      : Error("invalid parameter: " + f), field(f) {}
  std::string field;
};

/// Spreading coefficients left the partial-spreading regime (some sigma_i <= 0).
struct TotalSpreading : Error {
  TotalSpreading(int index, double value)
      : Error("total spreading regime: sigma" + std::to_string(index) + " = " +
              std::to_string(value) + " is not positive") {}
};

/// Time step exceeds the advective (or solid wave-speed) stability bound.
struct CflViolation : Error {
  CflViolation(double dt, double bound)
      : Error("CFL violation: dt = " + std::to_string(dt) +
              " exceeds stability bound " + std::to_string(bound)) {}
};

/// An iterative linear solve hit its iteration cap before converging.
struct LinearSolveFailure : Error {
  LinearSolveFailure(const std::string& what_solve, int iters, double rel)
      : Error(what_solve + " solve failed: " + std::to_string(iters) +
              " iterations, relative residual " + std::to_string(rel)),
        iterations(iters),
        rel_residual(rel) {}
  int iterations;
  double rel_residual;
};

/// The pressure Poisson solve hit its iteration cap before converging.
struct PoissonSolveFailure : Error {
  PoissonSolveFailure(int iters, double rel)
      : Error("pressure Poisson solve failed: " + std::to_string(iters) +
              " iterations, relative residual " + std::to_string(rel)) {}
};

/// Solid element inversion: det F <= 0 at a quadrature point.
struct Inverted : Error {
  explicit Inverted(double jac)
      : Error("element inversion: det F = " + std::to_string(jac)) {}
};

/// A requested level-set contour could not be located in the snapshot.
struct ContourNotFound : Error {
  using Error::Error;
};

/// A runtime invariant monitor tripped during a run; `code` is a short slug
/// (nan, sum-constraint, energy-increase) for machine-parsable reporting.
struct MonitorTrip : Error {
  MonitorTrip(const std::string& code_, double t, const std::string& detail)
      : Error("monitor '" + code_ + "' tripped at t = " + std::to_string(t) +
              (detail.empty() ? "" : ": " + detail)),
        code(code_),
        time(t) {}
  std::string code;
  double time;
};

/// File output failed.
struct IoFailure : Error {
  using Error::Error;
};

/// Config text could not be parsed; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  int line;
};

/// Config contained a key that no section defines.
struct UnknownKey : Error {
  UnknownKey(int line_no, const std::string& key)
      : Error("unknown key '" + key + "' at line " + std::to_string(line_no)),
        line(line_no) {}
  int line;
};

}  // namespace tricap
