#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "quadft/geom.hpp"

namespace quadft {

enum class ErrorKind {
  DegenerateInput,
  InvalidInput,
  DegenerateCoefficients,
  NotFloating,
  WrongCase,
  NonConvergence,
  InternalInconsistency,
};

const char* to_string(ErrorKind kind);

/// Base class for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a closed form presupposes the floating case but a vertex
/// absorbs the optimum. `vertex()` is 1-based.
class NotFloatingError : public Error {
 public:
  NotFloatingError(int vertex, const std::string& what)
      : Error(ErrorKind::NotFloating, what), vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(Point last, double residual, const std::string& what)
      : Error(ErrorKind::NonConvergence, what), last_(last), residual_(residual) {}

  Point last_iterate() const noexcept { return last_; }
  double residual() const noexcept { return residual_; }

 private:
  Point last_;
  double residual_;
};

/// Two or more vertices satisfy the absorbed inequality at once. Only
/// reachable through rounding near a tie.
class InconsistencyError : public Error {
 public:
  InconsistencyError(std::array<int, 2> vertices, const std::string& what)
      : Error(ErrorKind::InternalInconsistency, what), vertices_(vertices) {}

  std::array<int, 2> vertices() const noexcept { return vertices_; }

 private:
  std::array<int, 2> vertices_;
};

}  // namespace quadft
