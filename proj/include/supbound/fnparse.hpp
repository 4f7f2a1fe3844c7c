// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "supbound/maxpoly.hpp"

namespace supbound {

/// Parse a function in the assignment grammar, e.g. "max(X1 + 2*X2, X2 + 1)",
/// "3*X1^2 + 1/2" or "0", against a fixed arity (variables are X1..Xn).
/// Throws std::invalid_argument on malformed input.
MaxPolyFn parse_fn(const std::string& text, int arity);

}  // namespace supbound
