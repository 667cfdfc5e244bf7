#pragma once

#include <stdexcept>
#include <string>

namespace sfrob {

// Bad shapes, params, mismatched universes, malformed text.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed a configured size bound.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strategy has not passed verify_bijection at the requested size.
class UncertifiedStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schur coefficient matrix is singular or the linear system is inconsistent.
class RankDeficiency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sfrob
