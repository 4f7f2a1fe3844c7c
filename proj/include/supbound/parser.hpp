// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "supbound/term.hpp"

namespace supbound {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// Parse TRS source text. Symbol kinds are inferred: a symbol is Defined iff
/// it is the root of some left-hand side. Without a VARS header, an
/// identifier is a variable iff it is never applied to arguments and never
/// itself a top-level argument of a left-hand side; a "VARS x y z" header
/// pins the variable set explicitly and wins on conflict.
Trs parse_trs(const std::string& text);

/// Parse one term against an existing signature (CLI input). Identifiers not
/// in the signature are treated as variables when unapplied; applying an
/// unknown identifier is an error.
Term parse_term(const Trs& trs, const std::string& text);

}  // namespace supbound
