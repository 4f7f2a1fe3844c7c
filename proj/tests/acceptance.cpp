// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "supbound/encoder.hpp"
#include "supbound/fnparse.hpp"
#include "supbound/rcbridge.hpp"
#include "supbound/synthesizer.hpp"
#include "testsupport.hpp"

using namespace supbound;
using testsupport::load_assignment;
using testsupport::load_fixture;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Term numeral_under(const Trs& trs, const std::string& fn, int n) {
    std::string text = fn + "(";
    for (int i = 0; i < n; ++i) text += "s(";
    text += "0";
    for (int i = 0; i < n; ++i) text += ")";
    text += ")";
    return parse_term(trs, text);
}

// All one-step edges reachable from start (the union of all derivations).
std::vector<std::pair<Term, Term>> derivation_edges(const Trs& trs, const Term& start,
                                                    long budget = 50'000) {
    std::vector<std::pair<Term, Term>> edges;
    std::set<Term> seen;
    std::vector<Term> frontier{start};
    seen.insert(start);
    while (!frontier.empty() && static_cast<long>(edges.size()) < budget) {
        Term t = frontier.back();
        frontier.pop_back();
        for (const Term& next : rewrite_step(trs, t)) {
            edges.emplace_back(t, next);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return edges;
}

bool criterion1(std::string& detail) {
    Trs trs = load_fixture("qiex.trs");
    Assignment a = load_assignment(trs, "qiex.si");
    auto start = Clock::now();
    VerificationReport report = verify_qi(trs, a);
    double elapsed = seconds_since(start);
    detail = overall_to_string(report.overall) + " in " + std::to_string(elapsed) + " s";
    return report.overall == Overall::Valid && elapsed < 0.1;
}

bool criterion2(std::string& detail) {
    Trs trs = load_fixture("doubling.trs");
    Assignment a = load_assignment(trs, "doubling.si");
    VerificationReport report = verify_pi(trs, a, PiMode::NatStrict);
    if (report.overall != Overall::Valid) {
        detail = "verification " + overall_to_string(report.overall);
        return false;
    }
    std::mt19937_64 rng(2718);
    long edges_checked = 0;
    for (int n = 0; n <= 10; ++n) {
        for (auto& [s, t] : derivation_edges(trs, numeral_under(trs, "d", n))) {
            std::vector<std::string> vars = vars_of(s);
            MaxPolyFn before = extend_to_term(a, trs, s, vars);
            MaxPolyFn after = extend_to_term(a, trs, t, vars);
            std::vector<std::vector<Rational>> points;
            points.emplace_back(vars.size(), Rational(1));
            for (int i = 0; i < 20; ++i) points.push_back(testsupport::random_point(rng, vars.size()));
            for (const auto& point : points) {
                if (!(before.eval(point) > after.eval(point))) {
                    detail = "no strict decrease at an edge";
                    return false;
                }
            }
            ++edges_checked;
        }
    }
    detail = "Valid; strict decrease on " + std::to_string(edges_checked) + " derivation edges";
    return edges_checked > 0;
}

bool criterion3(std::string& detail) {
    Trs trs = load_fixture("halflog.trs");
    Assignment a = load_assignment(trs, "halflog.si");
    VerifyOptions opts;
    opts.relax_nullary = Rational(1);
    VerificationReport dpi = verify_dpi(trs, a, opts);
    if (dpi.overall != Overall::Valid) {
        detail = "DPI " + overall_to_string(dpi.overall);
        return false;
    }
    VerificationReport qi = verify_qi(trs, a, opts);
    if (qi.overall != Overall::Invalid) {
        detail = "QI " + overall_to_string(qi.overall);
        return false;
    }
    bool witnessed = false;
    for (const ConstraintResult& c : qi.constraints) {
        if (c.verdict != PropertyVerdict::Fails || !c.witness) continue;
        if (c.description.rfind("subterm [half]", 0) == 0) {
            const Rational& w = (*c.witness)[0];
            witnessed = a.fns.at("half").eval({w}) < w;
        }
    }
    if (!witnessed) {
        detail = "no concrete subterm witness";
        return false;
    }
    SynthesisConfig cfg;
    cfg.kind = CriterionKind::QI;
    cfg.domain = Domain::BoundedRationals;
    cfg.rat_bound = 2;
    cfg.coeff_bound = 2;
    SynthesisResult synth = synthesize_linear_template(trs, cfg);
    if (synth.status != SynthesisResult::Status::Exhausted) {
        detail = "linear-template QI synthesis did not exhaust";
        return false;
    }
    detail = "DPI Valid, QI Invalid with witness, linear QI synthesis Exhausted";
    return true;
}

struct Corpus {
    std::vector<Trs> found_trss;
    std::vector<SynthesisResult> found_results;
};

Corpus build_corpus(int target) {
    Corpus corpus;
    std::mt19937_64 rng(515253);
    SynthesisConfig cfg;
    cfg.domain = Domain::Naturals;
    cfg.max_branches = 1;
    cfg.coeff_bound = 2;
    for (int i = 0; i < 4000 && static_cast<int>(corpus.found_trss.size()) < target; ++i) {
        Trs trs = testsupport::random_small_trs(rng);
        SynthesisResult res = synthesize(trs, cfg);
        if (res.status != SynthesisResult::Status::Found) continue;
        corpus.found_trss.push_back(std::move(trs));
        corpus.found_results.push_back(std::move(res));
    }
    return corpus;
}

const Corpus& corpus() {
    static Corpus c = build_corpus(200);
    return c;
}

bool criterion4(std::string& detail) {
    const Corpus& c = corpus();
    if (c.found_trss.size() < 200) {
        detail = "only " + std::to_string(c.found_trss.size()) + " synthesized QIs";
        return false;
    }
    long exceptions = 0;
    for (std::size_t i = 0; i < c.found_trss.size(); ++i) {
        VerificationReport dpi = verify_dpi(c.found_trss[i], *c.found_results[i].assignment);
        if (dpi.overall != Overall::Valid) ++exceptions;
    }
    detail = std::to_string(c.found_trss.size()) + " found QIs re-verified as DPIs, " +
             std::to_string(exceptions) + " exceptions";
    return exceptions == 0;
}

bool criterion5(std::string& detail) {
    const Corpus& c = corpus();
    for (const SynthesisResult& res : c.found_results) {
        if (!res.certificate || res.certificate->overall != Overall::Valid) {
            detail = "a Found result lacks a Valid certificate";
            return false;
        }
    }
    // Status agreement with the unpruned oracle on small instances, both
    // Found and Exhausted sides.
    std::mt19937_64 rng(86420);
    SynthesisConfig cfg;
    cfg.domain = Domain::Naturals;
    cfg.max_branches = 1;
    cfg.coeff_bound = 1;
    int compared = 0, disagreements = 0;
    for (int i = 0; i < 600 && compared < 30; ++i) {
        Trs trs = testsupport::random_small_trs(rng);
        testsupport::OracleOutcome oracle = testsupport::brute_force_oracle(trs, cfg);
        if (oracle.space > 5'000) continue;
        ++compared;
        SynthesisResult res = synthesize(trs, cfg);
        bool found = res.status == SynthesisResult::Status::Found;
        if (found != oracle.found) ++disagreements;
    }
    detail = std::to_string(c.found_results.size()) + " Valid certificates; oracle agreement on " +
             std::to_string(compared) + " instances, " + std::to_string(disagreements) +
             " disagreements";
    return compared >= 30 && disagreements == 0;
}

bool criterion6(std::string& detail) {
    Trs id_trs = load_fixture("gadget-id.trs");
    for (int k = 1; k <= 2; ++k) {
        for (int d = 1; d <= 3; ++d) {
            SynthesisConfig cfg;
            cfg.domain = Domain::Naturals;
            cfg.max_branches = k;
            cfg.coeff_bound = d;
            SynthesisResult res = synthesize(id_trs, cfg);
            if (res.status != SynthesisResult::Status::Found) {
                detail = "gadget-id synthesis failed at k=" + std::to_string(k) +
                         " d=" + std::to_string(d);
                return false;
            }
            const MaxPolyFn& id_fn = res.assignment->fns.at("id");
            for (int x = 0; x <= 20; ++x) {
                if (id_fn.eval({Rational(x)}) != Rational(x)) {
                    detail = "synthesized id is not the identity at " + std::to_string(x);
                    return false;
                }
            }
        }
    }
    Trs sqrt2 = load_fixture("gadget-sqrt2.trs");
    for (int d = 1; d <= 6; ++d) {
        SynthesisConfig cfg;
        cfg.domain = Domain::BoundedRationals;
        cfg.rat_bound = d;
        cfg.coeff_bound = d;
        cfg.max_branches = 1;
        SynthesisResult res = synthesize(sqrt2, cfg);
        if (res.status != SynthesisResult::Status::Exhausted) {
            detail = "sqrt2 gadget not Exhausted at d=" + std::to_string(d);
            return false;
        }
    }
    detail = "id forced to identity on [0,20]; sqrt2 gadget Exhausted for d=1..6";
    return true;
}

bool criterion7(std::string& detail) {
    std::mt19937_64 rng(424242);
    std::vector<std::string> fixtures{"qiex.trs", "halflog.trs", "doubling.trs",
                                      "gadget-sqrt2.trs"};
    long traces_done = 0, violations = 0, steps = 0;
    while (traces_done < 1000) {
        for (const std::string& name : fixtures) {
            if (traces_done >= 1000) break;
            Trs trs = load_fixture(name);
            std::vector<Term> pool = basic_terms(trs, 8);
            if (pool.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            Trace trace = normalize_traced(trs, pool[pick(rng)], 60);
            SizeLemmaReport report = check_size_lemma(trs, {trace});
            violations += static_cast<long>(report.violations.size());
            steps += report.steps_checked;
            ++traces_done;
        }
    }
    detail = std::to_string(traces_done) + " traces, " + std::to_string(steps) + " steps, " +
             std::to_string(violations) + " violations";
    return violations == 0;
}

bool criterion8(std::string& detail) {
    auto start = Clock::now();
    Trs trs = load_fixture("doubling.trs");
    RcFunction rc = measure_rc(trs, 8).as_function();
    RcInterp interp = construct_si_from_rc(trs, rc);
    std::vector<Term> samples = basic_terms(trs, 8);
    EmpiricalReport report = empirical_si_check(trs, interp, samples);
    double elapsed = seconds_since(start);
    detail = std::to_string(report.checked) + " basic terms checked in " +
             std::to_string(elapsed) + " s, " + std::to_string(report.violations.size()) +
             " violations";
    return report.ok() && report.checked == static_cast<int>(samples.size()) && elapsed < 10.0;
}

bool criterion9(std::string& detail) {
    std::mt19937_64 rng(161803);
    long cases = 0;
    for (int i = 0; i < 200; ++i) {
        int arity = 1 + static_cast<int>(rng() % 3);
        FnExpr e = testsupport::random_expr(rng, arity, 5);
        MaxPolyFn f = normalize_fn(e, arity);
        for (int s = 0; s < 10; ++s) {
            auto p = testsupport::random_point(rng, arity);
            if (eval_expr(e, p) != f.eval(p)) {
                detail = "normalization not pointwise equal";
                return false;
            }
        }
        ++cases;
    }
    for (int i = 0; i < 200; ++i) {
        FnExpr fe = testsupport::random_expr(rng, 2, 3);
        FnExpr g1 = testsupport::random_expr(rng, 1, 3);
        FnExpr g2 = testsupport::random_expr(rng, 1, 3);
        MaxPolyFn f = normalize_fn(fe, 2);
        MaxPolyFn composed = compose(f, {normalize_fn(g1, 1), normalize_fn(g2, 1)});
        auto p = testsupport::random_point(rng, 1);
        std::vector<Rational> inner{eval_expr(g1, p), eval_expr(g2, p)};
        if (composed.eval(p) != f.eval(inner)) {
            detail = "composition disagrees with substitution";
            return false;
        }
        ++cases;
    }
    for (int i = 0; i < 200; ++i) {
        MaxPolyFn q = normalize_fn(testsupport::random_expr(rng, 2, 3), 2);
        MaxPolyFn qp = normalize_fn(testsupport::random_expr(rng, 2, 3), 2);
        GeqCnf cnf = decompose_geq(q, qp);
        auto p = testsupport::random_point(rng, 2);
        bool cnf_true = true;
        for (const GeqClause& clause : cnf.clauses) {
            bool some = false;
            for (const GeqAtom& atom : clause.atoms)
                some = some || atom.lhs.eval(p) >= atom.rhs.eval(p);
            cnf_true = cnf_true && some;
        }
        if (cnf_true != (q.eval(p) >= qp.eval(p))) {
            detail = "decomposition not pointwise sound";
            return false;
        }
        ++cases;
    }
    for (int i = 0; i < 200; ++i) {
        int arity = 1 + static_cast<int>(rng() % 2);
        MaxPolyFn f = normalize_fn(testsupport::random_expr(rng, arity, 4), arity);
        auto x = testsupport::random_point(rng, arity);
        auto y = x;
        for (auto& c : y) c += testsupport::random_rational(rng);
        if (!(f.eval(x) <= f.eval(y))) {
            detail = "monotonicity violated";
            return false;
        }
        ++cases;
    }
    detail = std::to_string(cases) + " randomized cases across four properties";
    return cases == 800;
}

bool criterion10(std::string& detail) {
    Trs trs = load_fixture("qiex.trs");
    FormulaDoc doc = encode(trs, CriterionKind::QI, 1, 1);
    auto model = parse_model(testsupport::read_file(testsupport::fixture_path("qiex-qi.model")));
    VerificationReport report = check_model(trs, doc, model);
    if (report.overall != Overall::Valid) {
        detail = "golden model did not re-substitute to Valid";
        return false;
    }
    std::string once = emit_smtlib(doc);
    std::string twice = emit_smtlib(encode(trs, CriterionKind::QI, 1, 1));
    std::string golden = testsupport::read_file(testsupport::fixture_path("golden/qiex-qi.smt2"));
    if (once != twice || once != golden) {
        detail = "SMT-LIB output not byte-stable against the golden file";
        return false;
    }
    std::string pi_golden =
        testsupport::read_file(testsupport::fixture_path("golden/doubling-pi.smt2"));
    Trs doubling = load_fixture("doubling.trs");
    if (emit_smtlib(encode(doubling, CriterionKind::PI, 1, 1)) != pi_golden) {
        detail = "PI golden mismatch";
        return false;
    }
    detail = "model round-trip Valid; goldens byte-stable";
    return true;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Entry> criteria{
        {"qiex quasi-interpretation verifies Valid in under 0.1 s", criterion1},
        {"doubling interpretation verifies Valid with strict decrease along derivations",
         criterion2},
        {"half/log: DPI Valid under relaxation, QI Invalid with witness, linear QI Exhausted",
         criterion3},
        {"every synthesized QI re-verifies as a DPI (200+ random systems)", criterion4},
        {"found certificates are Valid and statuses match the brute-force oracle", criterion5},
        {"gadget forcing: id is the identity; sqrt2 gadget exhausts all rational grids",
         criterion6},
        {"size lemma holds along 1000 traced derivations", criterion7},
        {"measured-rc bound passes the empirical check on doubling up to size 8", criterion8},
        {"algebra properties hold on 200-case randomized suites", criterion9},
        {"encoder round trip: golden model Valid, SMT-LIB goldens byte-stable", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        auto start = Clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed = seconds_since(start);
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
                  << criteria[i].name << "  [" << detail << "] (" << elapsed << " s)\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
