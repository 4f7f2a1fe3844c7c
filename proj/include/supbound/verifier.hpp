// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supbound/assignment.hpp"
#include "supbound/deppairs.hpp"
#include "supbound/rewrite.hpp"

namespace supbound {

enum class CriterionKind { PI, QI, DPI };

enum class PiMode { NatStrict, SubtermStrict2a, DeltaStrict2b };

struct VerifyOptions {
    std::optional<Rational> relax_nullary;
    Rational delta = Rational(1);    // strict-decrease margin (NatStrict and 2b)
    Rational epsilon = Rational(1);  // subterm-strict margin (2a)
    SamplePlan plan;
};

enum class Overall { Valid, Invalid, Inconclusive };

struct ConstraintResult {
    std::string description;
    PropertyVerdict verdict = PropertyVerdict::Unknown;
    std::optional<std::vector<Rational>> witness;
};

/// Per-constraint verdicts for a candidate assignment against one criterion.
/// The verifier is sound but not complete: Unknown constraints that sampling
/// cannot refute yield Inconclusive, never Valid.
struct VerificationReport {
    Overall overall = Overall::Inconclusive;
    std::vector<ConstraintResult> constraints;
    bool non_orthogonal_warning = false;
    std::string note;
};

VerificationReport verify_qi(const Trs& trs, const Assignment& a, const VerifyOptions& opts = {});
VerificationReport verify_pi(const Trs& trs, const Assignment& a, PiMode mode = PiMode::NatStrict,
                             const VerifyOptions& opts = {});
VerificationReport verify_dpi(const Trs& trs, const Assignment& a, const VerifyOptions& opts = {});

VerificationReport verify(const Trs& trs, const Assignment& a, CriterionKind kind,
                          PiMode mode = PiMode::NatStrict, const VerifyOptions& opts = {});

/// Checks one inequality lhs >= rhs + margin via decomposition and the
/// uniform-disjunct criterion, attempting a sampling refutation on Unknown.
ConstraintResult check_fn_geq(const std::string& description, const MaxPolyFn& lhs,
                              const MaxPolyFn& rhs, const Rational& margin,
                              const SamplePlan& plan);

/// Semantic view of an interpretation candidate, decoupled from MaxPolyFn so
/// that non-polynomial bounds (e.g. runtime-complexity constructions) can be
/// checked empirically.
class TermInterp {
public:
    virtual ~TermInterp() = default;
    virtual Rational term_value(const Term& ground) const = 0;
    virtual Rational apply(int symbol, const std::vector<Rational>& args) const = 0;
    virtual std::optional<Rational> additivity_bound() const = 0;
};

/// Assignment-backed semantic view.
class AssignmentInterp : public TermInterp {
public:
    AssignmentInterp(const Trs& trs, const Assignment& a,
                     const std::optional<Rational>& relax_nullary = std::nullopt);
    Rational term_value(const Term& ground) const override;
    Rational apply(int symbol, const std::vector<Rational>& args) const override;
    std::optional<Rational> additivity_bound() const override;

private:
    const Trs& trs_;
    const Assignment& a_;
    std::optional<Rational> k_;
};

struct EmpiricalViolation {
    Term term;
    std::string which;  // "sup" or "size"
    Rational lhs;
    Rational rhs;
};

struct EmpiricalReport {
    int checked = 0;
    int skipped_budget = 0;
    int skipped_stuck = 0;
    std::vector<EmpiricalViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For each basic-term sample that normalizes to a value within budget,
/// asserts theta(f(v...)) >= theta(value) and, when an additivity bound k is
/// available, the size bound theta(f)(k|v1|,...,k|vm|) >= |value|.
EmpiricalReport empirical_si_check(const Trs& trs, const TermInterp& interp,
                                   const std::vector<Term>& samples,
                                   long budget = kDefaultNormalizeBudget);

std::string overall_to_string(Overall o);
std::string verdict_to_string(PropertyVerdict v);
std::string report_to_string(const VerificationReport& report);

}  // namespace supbound
