// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "supbound/rational.hpp"

namespace supbound {

/// One inequality sum(coeffs[i] * x_i) + constant >= 0.
struct LinIneq {
    std::vector<Rational> coeffs;
    Rational constant;
};

/// Exact feasibility of a conjunction of linear inequalities over rationals
/// by Fourier-Motzkin elimination. On success returns a feasible point with
/// each variable set to the smallest value allowed by the already-fixed
/// suffix (deterministic). Variables without a lower bound get 0.
std::optional<std::vector<Rational>> solve_linear_feasibility(int num_vars,
                                                              const std::vector<LinIneq>& system);

}  // namespace supbound
