#pragma once

#include <stdexcept>
#include <string>

namespace pdcmode {

// Input violates a documented precondition (non-positive width, negative
// ratio, missing field, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A stored kernel fails one of its structural invariants (Hermiticity,
// negative diagonal, zero trace).
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Two kernels that must share a grid do not.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// A computation left its valid regime: truncated grid, iteration that did
// not converge, approximation evaluated outside its range.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Config file problems (bad syntax, unknown or missing keys, bad values).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdcmode
