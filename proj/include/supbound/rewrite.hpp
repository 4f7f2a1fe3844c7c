// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supbound/term.hpp"

namespace supbound {

struct Overlap {
    int inner_rule;  // rule whose lhs unifies into the other
    int outer_rule;
    Position pos;  // position inside outer_rule's lhs
};

struct OrthogonalityReport {
    bool left_linear = false;
    std::vector<Overlap> overlaps;
    bool orthogonal() const { return left_linear && overlaps.empty(); }
};

/// Left-linearity plus all overlaps between renamed left-hand sides and
/// non-variable subterms of left-hand sides. A rule's trivial overlap with
/// itself at the root is excluded; root overlaps are reported once per
/// unordered rule pair.
OrthogonalityReport check_orthogonality(const Trs& trs);

/// All one-step successors of t, outermost-leftmost position first, then by
/// rule index. Empty result means t is a normal form.
std::vector<Term> rewrite_step(const Trs& trs, const Term& t);

struct NormalizeResult {
    enum class Status { NormalForm, BudgetExceeded, StuckNonValue } status;
    Term term;     // final term (normal form, stuck form, or last term reached)
    long steps = 0;
};

inline constexpr long kDefaultNormalizeBudget = 10'000;
inline constexpr long kDefaultDlBudget = 100'000;

/// Leftmost-innermost normalization under a step budget. A normal form still
/// containing defined symbols is reported as StuckNonValue.
NormalizeResult normalize(const Trs& trs, const Term& t, long max_steps = kDefaultNormalizeBudget);

/// Same strategy, recording every intermediate term (trace[0] is the input).
struct Trace {
    std::vector<Term> states;
    NormalizeResult::Status status;
};
Trace normalize_traced(const Trs& trs, const Term& t, long max_steps = kDefaultNormalizeBudget);

struct DlResult {
    bool budget_exceeded = false;
    long value = 0;  // meaningful only when !budget_exceeded
};

/// Maximal derivation length from t over all reduction sequences, by
/// memoized exhaustive search over the reachable term graph. Cycles and
/// searches beyond the visited-state budget report budget_exceeded.
DlResult derivational_length(const Trs& trs, const Term& t, long budget = kDefaultDlBudget);

}  // namespace supbound
