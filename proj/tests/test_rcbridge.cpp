// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supbound/rcbridge.hpp"
#include "testsupport.hpp"

using namespace supbound;

TEST_CASE("basic terms enumerate defined roots over constructor tuples") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    auto terms = basic_terms(trs, 4);
    REQUIRE(terms.size() == 3);  // d(0), d(s(0)), d(s(s(0)))
    CHECK(term_to_string(trs, terms[0]) == "d(0)");
    CHECK(term_to_string(trs, terms[2]) == "d(s(s(0)))");
}

TEST_CASE("measured runtime complexity of the doubling system") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    RcReport report = measure_rc(trs, 5);
    REQUIRE(report.points.size() == 5);
    // dl(d(s^j(0))) = j + 1, so rc(n) = n - 1 for n >= 2.
    CHECK(report.points[0].rc == 0);  // no basic term has size 1
    CHECK(report.points[1].rc == 1);
    CHECK(report.points[2].rc == 2);
    CHECK(report.points[3].rc == 3);
    CHECK(report.points[4].rc == 4);
    CHECK(term_to_string(trs, *report.points[1].witness) == "d(0)");
    CHECK(report.flagged_nonterminating == 0);
    CHECK_FALSE(report.approximate);
}

TEST_CASE("rc measurements are monotone in the size bound") {
    Trs trs = testsupport::load_fixture("halflog.trs");
    RcReport report = measure_rc(trs, 7);
    long prev = 0;
    for (const RcPoint& p : report.points) {
        REQUIRE(p.rc.has_value());
        CHECK(*p.rc >= prev);
        prev = *p.rc;
    }
}

TEST_CASE("a TRS without applicable defined symbols has rc = 0") {
    Trs trs = parse_trs("VARS x\nf(s(x)) -> x\n");
    // only basic term shapes need s-towers; f(0) is basic too but 0 exists
    RcReport report = measure_rc(trs, 3);
    for (const RcPoint& p : report.points) CHECK(*p.rc <= 1);

    Trs none = parse_trs("VARS x y\ng(c(x, y)) -> x\n");
    // no nullary constructor: there are no ground basic terms at all
    RcReport empty = measure_rc(none, 4);
    for (const RcPoint& p : empty.points) CHECK(p.rc == 0);
}

TEST_CASE("looping systems are flagged and rc becomes undefined") {
    Trs trs = parse_trs("f(0) -> f(0)\n");
    RcReport report = measure_rc(trs, 3, 100);
    CHECK(report.flagged_nonterminating > 0);
    CHECK(report.points[0].rc == 0);  // size 1: no basic terms yet
    CHECK_FALSE(report.points[1].rc.has_value());
    CHECK_FALSE(report.points[2].rc.has_value());
    CHECK(report.as_function().eval(2) == std::nullopt);
}

TEST_CASE("construct_si_from_rc follows the closed form") {
    // arity-1 f, |trs| = 5, rc(n) = n: theta(f)(2) = 3 * 5^3 = 375
    Trs five = parse_trs("VARS x\nf(s(x)) -> s(x)\n");
    REQUIRE(five.trs_size() == 5);
    RcInterp interp = construct_si_from_rc(five, RcFunction::linear(1));
    auto f = *five.signature.find("f");
    CHECK(interp.apply(f, {Rational(2)}) == Rational(375));
}

TEST_CASE("nullary constructors map to zero; values evaluate below their size") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    RcInterp interp = construct_si_from_rc(trs, RcFunction::linear(1));
    Term zero = parse_term(trs, "0");
    CHECK(interp.term_value(zero) == Rational(0));
    // theta(v) counts the positive-arity constructors: |v| - #nullary leaves.
    for (int size = 1; size <= 8; ++size) {
        for (const Term& v : constructor_terms(trs, size)) {
            Rational theta = interp.term_value(v);
            CHECK(theta == Rational(size - 1));  // unary tower: one leaf
            CHECK(theta <= Rational(v.size()));
        }
    }
}

TEST_CASE("doubling: the constructed bound passes the empirical check exhaustively") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    RcFunction rc = measure_rc(trs, 8).as_function();
    RcInterp interp = construct_si_from_rc(trs, rc);
    std::vector<Term> samples = basic_terms(trs, 8);
    EmpiricalReport report = empirical_si_check(trs, interp, samples);
    CHECK(report.ok());
    CHECK(report.checked == static_cast<int>(samples.size()));
}

TEST_CASE("rc table misses are an error naming the offending size") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    RcInterp interp = construct_si_from_rc(trs, RcFunction::from_table({{1, 0}, {2, 1}}));
    auto d = *trs.signature.find("d");
    CHECK_THROWS_WITH_AS(interp.apply(d, {Rational(9)}), doctest::Contains("size 10"),
                         std::invalid_argument);
}

TEST_CASE("size lemma holds along traced derivations") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    std::vector<Trace> traces;
    for (const Term& t : basic_terms(trs, 7)) traces.push_back(normalize_traced(trs, t));
    SizeLemmaReport report = check_size_lemma(trs, traces);
    CHECK(report.ok());
    CHECK(report.traces == static_cast<long>(traces.size()));
    CHECK(report.tightest <= Rational(1));
    CHECK(report.tightest > Rational(0));
}

TEST_CASE("size lemma on duplicating systems still holds with slack") {
    Trs trs = parse_trs("VARS x\ng(s(x)) -> c(g(x), g(x))\ng(0) -> 0\n");
    std::vector<Trace> traces;
    for (const Term& t : basic_terms(trs, 6)) traces.push_back(normalize_traced(trs, t));
    SizeLemmaReport report = check_size_lemma(trs, traces);
    CHECK(report.ok());
    CHECK(report.steps_checked > 0);
}

TEST_CASE("a zero-step trace meets the bound with equality") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    Trace trivial = normalize_traced(trs, parse_term(trs, "s(0)"));
    SizeLemmaReport report = check_size_lemma(trs, {trivial});
    CHECK(report.ok());
    CHECK(report.tightest == Rational(1));
}
