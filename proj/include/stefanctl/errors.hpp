#pragma once

#include <stdexcept>
#include <string>

namespace stefanctl {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical parameter or scenario field violates its validity range.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A scenario file could not be parsed. line() is 1-based; 0 means the
/// complaint applies to the file as a whole (e.g. missing keys).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Explicit step size exceeds the diffusion stability bound.
class StepSizeError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values appeared in the state. time() is the simulation time
/// of the failing step.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& msg, double t)
      : Error(msg + " at t = " + std::to_string(t) + " s"), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

/// Interface position fell below the configured floor.
class InterfaceCollapseError : public Error {
 public:
  InterfaceCollapseError(const std::string& msg, double t)
      : Error(msg + " at t = " + std::to_string(t) + " s"), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

/// Lyapunov certificate parameters produce a non-positive decay rate.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace stefanctl
