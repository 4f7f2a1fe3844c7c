// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supbound/verifier.hpp"

namespace supbound {

/// Nondecreasing bound on derivation length as a function of term size.
struct RcFunction {
    enum class Kind { Linear, Poly, Table } kind = Kind::Linear;
    long c = 1;
    long e = 1;
    std::map<long, long> table;

    static RcFunction linear(long c) { return {Kind::Linear, c, 1, {}}; }
    static RcFunction poly(long c, long e) { return {Kind::Poly, c, e, {}}; }
    static RcFunction from_table(std::map<long, long> table) {
        return {Kind::Table, 0, 0, std::move(table)};
    }

    /// rc at size n; nullopt when a table has no entry for n.
    std::optional<long> eval(long n) const;
    std::string describe() const;
};

struct RcPoint {
    long size = 0;
    // Cumulative: max derivational length over basic terms of size <= n.
    // Empty when every measurement up to this size exceeded the budget.
    std::optional<long> rc;
    std::optional<Term> witness;
};

struct RcReport {
    long max_size = 0;
    std::vector<RcPoint> points;
    long flagged_nonterminating = 0;  // measurements dropped for exceeding the budget
    bool approximate = false;         // sampled (not exhaustive) beyond the cap
    RcFunction as_function() const;
};

/// Sizes above this are sampled rather than exhaustively enumerated.
inline constexpr long kExhaustiveRcSize = 12;

/// All constructor ground terms of exactly the given size, canonical order.
std::vector<Term> constructor_terms(const Trs& trs, int size);

/// All basic terms f(v1..vn) with constructor-term arguments, size <= max_size.
std::vector<Term> basic_terms(const Trs& trs, int max_size);

RcReport measure_rc(const Trs& trs, int max_size, long budget = kDefaultDlBudget,
                    unsigned long sample_seed = 20230501);

/// The assignment built from a runtime-complexity bound: nullary
/// constructors map to 0, positive-arity constructors to sum+1, and each
/// defined symbol to (sum+1) * |trs|^rc(sum+1). The image is exponential, so
/// the object is semantic (usable by empirical_si_check) rather than a
/// MaxPolyFn; big-integer arithmetic keeps it exact.
class RcInterp : public TermInterp {
public:
    RcInterp(const Trs& trs, RcFunction rc);
    Rational term_value(const Term& ground) const override;
    Rational apply(int symbol, const std::vector<Rational>& args) const override;
    std::optional<Rational> additivity_bound() const override { return Rational(1); }

    /// Closed-form rendering of every symbol's bound.
    std::string pretty() const;

private:
    const Trs& trs_;
    RcFunction rc_;
    Rational trs_size_;
};

RcInterp construct_si_from_rc(const Trs& trs, RcFunction rc);

struct SizeLemmaReport {
    long traces = 0;
    long steps_checked = 0;
    std::vector<std::pair<Term, long>> violations;  // start term, violating step
    Rational tightest;                              // max observed |s| / (|t| * |P|^n)
    bool ok() const { return violations.empty(); }
};

/// For every traced derivation t ->^n s, checks |s| <= |t| * |trs|^n exactly.
SizeLemmaReport check_size_lemma(const Trs& trs, const std::vector<Trace>& traces);

}  // namespace supbound
