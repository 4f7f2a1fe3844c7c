// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supbound/maxpoly.hpp"
#include "supbound/term.hpp"

namespace supbound {

/// Map from symbol names (and optionally marked names "f#") to functions.
/// Marked symbols fall back to their base mapping.
struct Assignment {
    std::map<std::string, MaxPolyFn> fns;

    const MaxPolyFn* find(const std::string& name) const;
    const MaxPolyFn* find_marked(const std::string& base_name) const;

    /// Names of signature symbols without a mapping (empty means total).
    std::vector<std::string> missing_on(const Trs& trs) const;
};

/// Parse lines "symbol = fn"; '#' starts a comment.
Assignment parse_assignment(const Trs& trs, const std::string& text);
std::string assignment_to_string(const Assignment& a);

struct ConstructorDiag {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct AdditivityReport {
    bool additive = false;
    std::optional<Rational> k;  // max additive constant; defined only when additive
    std::vector<ConstructorDiag> per_constructor;
};

/// Additive: every constructor of positive arity maps to X1+...+Xn + kc with
/// kc >= 1, and every nullary constructor maps to 0 (or to a constant within
/// [0, relax_nullary] when the relaxation is given).
AdditivityReport check_additive(const Assignment& a, const Trs& trs,
                                const std::optional<Rational>& relax_nullary = std::nullopt);

enum class PropertyVerdict { Holds, Unknown, Fails };

struct SymbolVerdict {
    std::string symbol;
    PropertyVerdict verdict = PropertyVerdict::Unknown;
    std::optional<std::vector<Rational>> witness;
    std::string detail;
};

/// Weak monotonicity; structural for nonnegative coefficients, so this always
/// holds in the algebra and is retained as an explicit report pass.
std::vector<SymbolVerdict> check_monotone(const Assignment& a, const Trs& trs);

/// Sufficient syntactic criterion: for each argument i, every branch carries
/// a monomial in Xi alone with positive coefficient. Unknown otherwise
/// (max(X1, X2) is weakly but not strictly monotone).
std::vector<SymbolVerdict> check_strictly_monotone(const Assignment& a, const Trs& trs);

/// Per symbol and argument j, uniform-disjunct check of f >= Xj, with a
/// sampling refutation attempt turning Unknown into Fails(witness).
std::vector<SymbolVerdict> check_subterm(const Assignment& a, const Trs& trs,
                                         const SamplePlan& plan = SamplePlan{});

/// Canonical homomorphic extension of the assignment to a term; variables map
/// to argument positions per var_order. Throws on a missing symbol mapping or
/// a variable outside var_order.
MaxPolyFn extend_to_term(const Assignment& a, const Trs& trs, const Term& t,
                         const std::vector<std::string>& var_order);

}  // namespace supbound
