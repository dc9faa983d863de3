#pragma once

#include <stdexcept>
#include <string>

namespace agm {

// Base of every error thrown by the library. code() is a stable,
// machine-readable identifier surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error("convergence", what) {}
};

// Carries the last two estimates of the node-doubling sequence.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double previous, double last)
      : Error("quadrature", what), previous_(previous), last_(last) {}
  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

class LinearAlgebraError : public Error {
 public:
  explicit LinearAlgebraError(const std::string& what) : Error("linear_algebra", what) {}
};

class OrderingError : public Error {
 public:
  explicit OrderingError(const std::string& what) : Error("ordering", what) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error("input", what) {}
};

}  // namespace agm
