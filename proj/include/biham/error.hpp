// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biham {

// Base of every exception thrown by the library. The C API maps each
// subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The implicit mid-point solve did not reach its residual tolerance.
class NonConvergence : public Error {
 public:
  NonConvergence(double last_residual, std::size_t step_index);

  double last_residual() const noexcept { return last_residual_; }
  // Index of the step that failed (1-based: step k produces record k).
  std::size_t step_index() const noexcept { return step_index_; }

 private:
  double last_residual_;
  std::size_t step_index_;
};

// Operation requested for an equilibrium family it is not defined on.
class WrongFamily : public Error {
 public:
  using Error::Error;
};

class NoMultiplier : public Error {
 public:
  using Error::Error;
};

// The fiber solver returned no admissible point.
class NoSolutions : public Error {
 public:
  using Error::Error;
};

}  // namespace biham
