// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/error.hpp"

namespace biham {

NonConvergence::NonConvergence(double last_residual, std::size_t step_index)
    : Error("implicit mid-point solve did not converge at step " + std::to_string(step_index) +
            " (last residual " + std::to_string(last_residual) + ")"),
      last_residual_(last_residual),
      step_index_(step_index) {}

}  // namespace biham
