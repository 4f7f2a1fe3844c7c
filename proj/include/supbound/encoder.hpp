// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "supbound/verifier.hpp"

namespace supbound {

/// Product of unknown coefficients (name -> power); empty means 1.
using CoefMono = std::map<std::string, unsigned>;
/// Rational combination of unknown-coefficient products.
struct CoefExpr {
    std::map<CoefMono, Rational> terms;
    bool is_zero() const { return terms.empty(); }
};
/// Polynomial over universal variables whose coefficients are CoefExprs.
using TemplPoly = std::map<Exponents, CoefExpr>;

/// Template for one symbol: branch i spans all monomial supports with total
/// degree <= d, each with unknown coefficient a[f, i, j1...jn].
struct TemplFn {
    int arity = 0;
    std::vector<TemplPoly> branches;
};

struct EncAtom {
    TemplPoly lhs;
    TemplPoly rhs;
    bool strict = false;      // emit > instead of >=
    bool plus_delta = false;  // rhs + delta
};

/// One encoded property: a CNF matrix, optionally guarded by a pointwise
/// comparison premise between the first and second halves of the universal
/// variables (monotonicity encodings).
struct EncGroup {
    std::string label;
    enum class Premise { None, WeakMono, StrictMono } premise = Premise::None;
    int premise_arity = 0;
    int var_count = 0;
    std::vector<std::vector<EncAtom>> cnf;
};

/// Prenex two-block document: an existential block of coefficient constants
/// (plus delta for strict criteria) and one universal block of variables.
struct FormulaDoc {
    CriterionKind kind = CriterionKind::QI;
    PiMode pi_mode = PiMode::NatStrict;
    int k = 1;
    int d = 1;
    bool has_delta = false;
    int universal_count = 0;
    std::vector<std::string> coeff_names;           // declaration order
    std::map<std::string, TemplFn> templates;       // symbol name -> template
    std::vector<EncGroup> groups;
};

FormulaDoc encode(const Trs& trs, CriterionKind kind, int k, int d,
                  PiMode pi_mode = PiMode::NatStrict);

/// SMT-LIB 2 rendering (logic NRA), byte-deterministic for identical inputs.
std::string emit_smtlib(const FormulaDoc& doc);

/// Parse "(define-fun name () Real value)" lines into a coefficient valuation.
std::map<std::string, Rational> parse_model(const std::string& text);

/// Substitute a model into the document's templates and re-verify the
/// resulting assignment with the criterion the document encodes.
VerificationReport check_model(const Trs& trs, const FormulaDoc& doc,
                               const std::map<std::string, Rational>& model,
                               const VerifyOptions& opts = {});

/// The assignment a model induces (exposed for tests and the CLI).
Assignment assignment_from_model(const Trs& trs, const FormulaDoc& doc,
                                 const std::map<std::string, Rational>& model);

}  // namespace supbound
