// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/verifier.hpp"

#include <stdexcept>

namespace supbound {

ConstraintResult check_fn_geq(const std::string& description, const MaxPolyFn& lhs,
                              const MaxPolyFn& rhs, const Rational& margin,
                              const SamplePlan& plan) {
    MaxPolyFn bound = margin.is_zero() ? rhs : rhs.plus_const(margin);
    GeqCnf cnf = decompose_geq(lhs, bound);
    bool holds = true;
    for (const GeqClause& clause : cnf.clauses)
        holds = holds && check_clause_uniform(clause) == ClauseVerdict::Holds;
    if (holds) return {description, PropertyVerdict::Holds, std::nullopt};
    if (auto w = refute_by_sampling(lhs, bound, plan))
        return {description, PropertyVerdict::Fails, *w};
    return {description, PropertyVerdict::Unknown, std::nullopt};
}

namespace {

void require_total(const Trs& trs, const Assignment& a) {
    auto missing = a.missing_on(trs);
    if (!missing.empty())
        throw std::invalid_argument("missing symbol mapping for '" + missing.front() + "'");
}

void push_additivity(std::vector<ConstraintResult>& out, const Trs& trs, const Assignment& a,
                     const std::optional<Rational>& relax) {
    AdditivityReport add = check_additive(a, trs, relax);
    for (const ConstructorDiag& d : add.per_constructor) {
        out.push_back({"additive [" + d.name + "]: " + d.detail,
                       d.ok ? PropertyVerdict::Holds : PropertyVerdict::Fails, std::nullopt});
    }
}

void push_symbol_verdicts(std::vector<ConstraintResult>& out, const std::string& what,
                          const std::vector<SymbolVerdict>& verdicts) {
    for (const SymbolVerdict& v : verdicts) {
        std::string desc = what + " [" + v.symbol + "]";
        if (!v.detail.empty()) desc += ": " + v.detail;
        out.push_back({desc, v.verdict, v.witness});
    }
}

MaxPolyFn extend_marked_root(const Assignment& a, const Trs& trs, const Term& t,
                             const std::vector<std::string>& var_order) {
    const Symbol& sym = trs.signature.at(t.symbol());
    const MaxPolyFn* root = a.find_marked(sym.name);
    if (!root) throw std::invalid_argument("missing symbol mapping for '" + sym.name + "'");
    std::vector<MaxPolyFn> args;
    args.reserve(t.args().size());
    for (const Term& sub : t.args()) args.push_back(extend_to_term(a, trs, sub, var_order));
    if (t.args().empty())
        return MaxPolyFn::constant(static_cast<int>(var_order.size()), root->eval({}));
    return compose(*root, args);
}

Overall summarize(const std::vector<ConstraintResult>& constraints) {
    bool any_fails = false, any_unknown = false;
    for (const ConstraintResult& c : constraints) {
        any_fails = any_fails || c.verdict == PropertyVerdict::Fails;
        any_unknown = any_unknown || c.verdict == PropertyVerdict::Unknown;
    }
    if (any_fails) return Overall::Invalid;
    if (any_unknown) return Overall::Inconclusive;
    return Overall::Valid;
}

constexpr const char* kSoundnessNote =
    "sound but incomplete: Unknown constraints are never counted as holding";

}  // namespace

VerificationReport verify_qi(const Trs& trs, const Assignment& a, const VerifyOptions& opts) {
    require_total(trs, a);
    VerificationReport report;
    report.note = kSoundnessNote;
    report.non_orthogonal_warning = !check_orthogonality(trs).orthogonal();
    push_additivity(report.constraints, trs, a, opts.relax_nullary);
    push_symbol_verdicts(report.constraints, "monotone", check_monotone(a, trs));
    push_symbol_verdicts(report.constraints, "subterm", check_subterm(a, trs, opts.plan));
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        std::vector<std::string> vars = vars_of(rule.lhs);
        MaxPolyFn lhs = extend_to_term(a, trs, rule.lhs, vars);
        MaxPolyFn rhs = extend_to_term(a, trs, rule.rhs, vars);
        std::string desc = "rule " + std::to_string(i + 1) + ": [" +
                           term_to_string(trs, rule.lhs) + "] >= [" +
                           term_to_string(trs, rule.rhs) + "]";
        report.constraints.push_back(check_fn_geq(desc, lhs, rhs, Rational(0), opts.plan));
    }
    report.overall = summarize(report.constraints);
    return report;
}

VerificationReport verify_pi(const Trs& trs, const Assignment& a, PiMode mode,
                             const VerifyOptions& opts) {
    require_total(trs, a);
    VerificationReport report;
    report.note = kSoundnessNote;
    report.non_orthogonal_warning = !check_orthogonality(trs).orthogonal();
    push_additivity(report.constraints, trs, a, opts.relax_nullary);
    push_symbol_verdicts(report.constraints, "strictly monotone", check_strictly_monotone(a, trs));
    if (mode == PiMode::SubtermStrict2a) {
        for (const Symbol& sym : trs.signature.symbols()) {
            const MaxPolyFn* f = a.find(sym.name);
            for (int arg = 0; arg < sym.arity; ++arg) {
                std::string desc =
                    "strict subterm [" + sym.name + "] > X" + std::to_string(arg + 1);
                report.constraints.push_back(check_fn_geq(
                    desc, *f, MaxPolyFn::variable(sym.arity, arg), opts.epsilon, opts.plan));
            }
        }
    }
    Rational margin = mode == PiMode::NatStrict ? Rational(1) : opts.delta;
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        std::vector<std::string> vars = vars_of(rule.lhs);
        MaxPolyFn lhs = extend_to_term(a, trs, rule.lhs, vars);
        MaxPolyFn rhs = extend_to_term(a, trs, rule.rhs, vars);
        std::string desc = "rule " + std::to_string(i + 1) + ": [" +
                           term_to_string(trs, rule.lhs) + "] > [" +
                           term_to_string(trs, rule.rhs) + "]";
        report.constraints.push_back(check_fn_geq(desc, lhs, rhs, margin, opts.plan));
    }
    report.overall = summarize(report.constraints);
    return report;
}

VerificationReport verify_dpi(const Trs& trs, const Assignment& a, const VerifyOptions& opts) {
    require_total(trs, a);
    VerificationReport report;
    report.note = kSoundnessNote;
    report.non_orthogonal_warning = !check_orthogonality(trs).orthogonal();
    push_additivity(report.constraints, trs, a, opts.relax_nullary);
    push_symbol_verdicts(report.constraints, "monotone", check_monotone(a, trs));
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        std::vector<std::string> vars = vars_of(rule.lhs);
        MaxPolyFn lhs = extend_to_term(a, trs, rule.lhs, vars);
        MaxPolyFn rhs = extend_to_term(a, trs, rule.rhs, vars);
        std::string desc = "rule " + std::to_string(i + 1) + ": <" +
                           term_to_string(trs, rule.lhs) + "> >= <" +
                           term_to_string(trs, rule.rhs) + ">";
        report.constraints.push_back(check_fn_geq(desc, lhs, rhs, Rational(0), opts.plan));
    }
    for (const DependencyPair& dp : dependency_pairs(trs)) {
        std::vector<std::string> vars = vars_of(dp.lhs);
        MaxPolyFn lhs = extend_marked_root(a, trs, dp.lhs, vars);
        MaxPolyFn rhs = extend_marked_root(a, trs, dp.rhs, vars);
        std::string desc = "dp: <" + term_to_string(trs, dp.lhs, true) + "> >= <" +
                           term_to_string(trs, dp.rhs, true) + ">";
        report.constraints.push_back(check_fn_geq(desc, lhs, rhs, Rational(0), opts.plan));
    }
    report.overall = summarize(report.constraints);
    return report;
}

VerificationReport verify(const Trs& trs, const Assignment& a, CriterionKind kind, PiMode mode,
                          const VerifyOptions& opts) {
    switch (kind) {
        case CriterionKind::PI:
            return verify_pi(trs, a, mode, opts);
        case CriterionKind::QI:
            return verify_qi(trs, a, opts);
        case CriterionKind::DPI:
            return verify_dpi(trs, a, opts);
    }
    throw std::logic_error("unreachable");
}

AssignmentInterp::AssignmentInterp(const Trs& trs, const Assignment& a,
                                   const std::optional<Rational>& relax_nullary)
    : trs_(trs), a_(a) {
    AdditivityReport add = check_additive(a, trs, relax_nullary);
    if (add.additive) k_ = add.k;
}

Rational AssignmentInterp::term_value(const Term& ground) const {
    return extend_to_term(a_, trs_, ground, {}).eval({});
}

Rational AssignmentInterp::apply(int symbol, const std::vector<Rational>& args) const {
    const MaxPolyFn* f = a_.find(trs_.signature.at(symbol).name);
    if (!f) throw std::invalid_argument("missing symbol mapping");
    return f->eval(args);
}

std::optional<Rational> AssignmentInterp::additivity_bound() const { return k_; }

EmpiricalReport empirical_si_check(const Trs& trs, const TermInterp& interp,
                                   const std::vector<Term>& samples, long budget) {
    EmpiricalReport report;
    std::optional<Rational> k = interp.additivity_bound();
    for (const Term& sample : samples) {
        NormalizeResult nf = normalize(trs, sample, budget);
        if (nf.status == NormalizeResult::Status::BudgetExceeded) {
            ++report.skipped_budget;
            continue;
        }
        if (nf.status == NormalizeResult::Status::StuckNonValue) {
            ++report.skipped_stuck;
            continue;
        }
        ++report.checked;
        Rational lhs = interp.term_value(sample);
        Rational rhs = interp.term_value(nf.term);
        if (!(lhs >= rhs)) report.violations.push_back({sample, "sup", lhs, rhs});
        if (k && !sample.is_var() &&
            trs.signature.at(sample.symbol()).kind == SymbolKind::Defined) {
            std::vector<Rational> scaled_sizes;
            for (const Term& arg : sample.args())
                scaled_sizes.push_back(*k * Rational(arg.size()));
            Rational size_bound = interp.apply(sample.symbol(), scaled_sizes);
            Rational value_size = Rational(nf.term.size());
            if (!(size_bound >= value_size))
                report.violations.push_back({sample, "size", size_bound, value_size});
        }
    }
    return report;
}

std::string overall_to_string(Overall o) {
    switch (o) {
        case Overall::Valid: return "Valid";
        case Overall::Invalid: return "Invalid";
        case Overall::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string verdict_to_string(PropertyVerdict v) {
    switch (v) {
        case PropertyVerdict::Holds: return "Holds";
        case PropertyVerdict::Fails: return "Fails";
        case PropertyVerdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string report_to_string(const VerificationReport& report) {
    std::string out = "overall: " + overall_to_string(report.overall) + "\n";
    if (!report.note.empty()) out += "note: " + report.note + "\n";
    if (report.non_orthogonal_warning)
        out += "warning: input is not orthogonal; function-semantics claims are unreliable\n";
    for (const ConstraintResult& c : report.constraints) {
        out += "  " + verdict_to_string(c.verdict) + "  " + c.description;
        if (c.witness) {
            out += "  [witness:";
            for (const Rational& x : *c.witness) out += " " + x.str();
            out += "]";
        }
        out += "\n";
    }
    return out;
}

}  // namespace supbound
