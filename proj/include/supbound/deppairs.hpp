// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "supbound/term.hpp"

namespace supbound {

/// A pair l# -> u# extracted from a rule l -> r: u is a defined-rooted
/// subterm of r that is not a proper subterm of l. Terms are stored unmarked;
/// the roots are implicitly marked.
struct DependencyPair {
    Term lhs;        // rule left-hand side (root marked as l#)
    Term rhs;        // defined-rooted subterm of the rule's rhs (root marked as u#)
    int origin = 0;  // rule index
    Position pos;    // position of rhs inside the rule's right-hand side
};

/// All dependency pairs, ordered by (rule index, position). A rhs subterm
/// equal to the whole lhs is kept: it is not a *proper* subterm.
std::vector<DependencyPair> dependency_pairs(const Trs& trs);

/// "f#(...) -> g#(...)" rendering.
std::string dp_to_string(const Trs& trs, const DependencyPair& dp);

}  // namespace supbound
