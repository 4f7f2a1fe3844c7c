// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "supbound/verifier.hpp"

namespace supbound {

enum class Domain { Naturals, BoundedRationals };

struct SynthesisConfig {
    CriterionKind kind = CriterionKind::QI;  // QI or DPI
    Domain domain = Domain::Naturals;
    int rat_bound = 1;      // numerator/denominator bound for BoundedRationals
    int max_branches = 1;   // k
    int coeff_bound = 1;    // d
    std::optional<Rational> nullary_relax;
    std::chrono::milliseconds time_budget{120'000};
    SamplePlan plan;
};

struct SynthesisResult {
    enum class Status { Found, Exhausted, TimedOut } status = Status::Exhausted;
    std::optional<Assignment> assignment;
    long candidates_tried = 0;
    std::optional<VerificationReport> certificate;  // Valid whenever Found
};

/// Coefficient grid of the configured domain: 0..d over naturals, or all
/// reduced fractions with numerator and denominator <= d.
std::vector<Rational> coefficient_grid(const SynthesisConfig& cfg);

struct CandidateFn {
    MaxPolyFn fn;
    long grade;  // sum of coefficient numerators + branch count
};

/// All candidate functions for one symbol under the config: the additive
/// template for constructors, MaxPlus functions with at most k branches for
/// defined symbols. Sorted by (grade, branch order).
std::vector<CandidateFn> candidate_functions(const Trs& trs, int symbol, const SynthesisConfig& cfg);

/// Deterministic guess-and-verify over the bounded MaxPlus space, in graded
/// lexicographic order, pruning a partial assignment as soon as any fully
/// determined constraint stops holding. The first candidate certified Valid
/// by the verifier wins.
SynthesisResult synthesize(const Trs& trs, const SynthesisConfig& cfg);

/// Exact path for the max-free affine class: defined-symbol slopes are
/// enumerated over the domain grid and, per slope tuple, all additive
/// constants are solved exactly as a rational linear-feasibility problem.
/// Exhausted is relative to this template class.
SynthesisResult synthesize_linear_template(const Trs& trs, const SynthesisConfig& cfg);

}  // namespace supbound
