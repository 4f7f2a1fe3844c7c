// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "supbound/parser.hpp"
#include "supbound/rewrite.hpp"
#include "testsupport.hpp"

using namespace supbound;

TEST_CASE("parse infers kinds, arities and deterministic symbol order") {
    Trs trs = parse_trs("f(s(x)) -> s(f(x))\nf(0) -> 0\n");
    REQUIRE(trs.rules.size() == 2);
    REQUIRE(trs.signature.size() == 3);
    CHECK(trs.signature.at(0).name == "f");
    CHECK(trs.signature.at(0).kind == SymbolKind::Defined);
    CHECK(trs.signature.at(1).name == "s");
    CHECK(trs.signature.at(1).kind == SymbolKind::Constructor);
    CHECK(trs.signature.at(1).arity == 1);
    CHECK(trs.signature.at(2).name == "0");
    CHECK(trs.signature.at(2).kind == SymbolKind::Constructor);
    CHECK(trs.signature.at(2).arity == 0);
}

TEST_CASE("parse rejects rhs variables missing from the lhs") {
    CHECK_THROWS_WITH_AS(parse_trs("VARS x y\nf(x) -> g(x, y)\n"),
                         doctest::Contains("'y' does not occur"), ParseError);
}

TEST_CASE("parse rejects defined symbols inside lhs patterns") {
    CHECK_THROWS_WITH_AS(parse_trs("VARS x\nf(g(x)) -> x\ng(x) -> x\n"),
                         doctest::Contains("non-pattern"), ParseError);
}

TEST_CASE("parse rejects arity conflicts") {
    CHECK_THROWS_AS(parse_trs("VARS x\nf(x) -> 0\nf(x, x) -> 0\n"), ParseError);
}

TEST_CASE("parse reports syntax errors with line and column") {
    try {
        parse_trs("f(s(x)) -> \n-> 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("VARS header wins over inference") {
    // Without the header x would be read as a constant (bare lhs argument).
    Trs with_header = parse_trs("VARS x\nid(x) -> id(id(x))\n");
    CHECK(with_header.signature.size() == 1);
    CHECK(with_header.rules[0].lhs.args()[0].is_var());

    Trs bare = parse_trs("id(x) -> id(id(x))\n");
    CHECK(bare.signature.size() == 2);  // x became a constructor constant
    CHECK_FALSE(bare.rules[0].lhs.args()[0].is_var());
}

TEST_CASE("orthogonality: disjoint patterns") {
    Trs trs = parse_trs("VARS x\nf(s(x)) -> x\nf(0) -> 0\n");
    OrthogonalityReport report = check_orthogonality(trs);
    CHECK(report.left_linear);
    CHECK(report.overlaps.empty());
    CHECK(report.orthogonal());
}

TEST_CASE("orthogonality: repeated variable breaks left-linearity") {
    Trs trs = parse_trs("VARS x\nf(x, x) -> x\n");
    OrthogonalityReport report = check_orthogonality(trs);
    CHECK_FALSE(report.left_linear);
}

TEST_CASE("orthogonality: unifiable lhss overlap at the root") {
    Trs trs = parse_trs("VARS x\nf(s(x)) -> x\nf(s(0)) -> 0\n");
    OrthogonalityReport report = check_orthogonality(trs);
    CHECK(report.left_linear);
    REQUIRE(report.overlaps.size() == 1);
    CHECK(report.overlaps[0].inner_rule == 0);
    CHECK(report.overlaps[0].outer_rule == 1);
    CHECK(report.overlaps[0].pos.empty());
}

TEST_CASE("rewrite_step enumerates redexes outermost-leftmost") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    Term t = parse_term(trs, "d(s(0))");
    auto succ = rewrite_step(trs, t);
    REQUIRE(succ.size() == 1);
    CHECK(term_to_string(trs, succ[0]) == "s(s(d(0)))");

    CHECK(rewrite_step(trs, parse_term(trs, "s(0)")).empty());
}

TEST_CASE("rewrite_step returns one successor per redex position") {
    Trs trs = parse_trs("VARS x\nf(x) -> x\n");
    Term t = parse_term(trs, "f(f(0))");
    auto succ = rewrite_step(trs, t);
    REQUIRE(succ.size() == 2);
    CHECK(term_to_string(trs, succ[0]) == "f(0)");
    CHECK(term_to_string(trs, succ[1]) == "f(0)");
}

TEST_CASE("normalize applies leftmost-innermost steps") {
    Trs trs = parse_trs("VARS x\nf(s(x)) -> s(f(x))\nf(0) -> 0\n");
    NormalizeResult r = normalize(trs, parse_term(trs, "f(s(0))"), 10);
    CHECK(r.status == NormalizeResult::Status::NormalForm);
    CHECK(term_to_string(trs, r.term) == "s(0)");
    CHECK(r.steps == 2);

    NormalizeResult value = normalize(trs, parse_term(trs, "0"));
    CHECK(value.steps == 0);
    CHECK(value.status == NormalizeResult::Status::NormalForm);
}

TEST_CASE("normalize reports budget exhaustion on loops") {
    Trs trs = parse_trs("f(0) -> f(0)\n");
    NormalizeResult r = normalize(trs, parse_term(trs, "f(0)"), 5);
    CHECK(r.status == NormalizeResult::Status::BudgetExceeded);
}

TEST_CASE("normalize flags normal forms containing defined symbols") {
    Trs trs = parse_trs("VARS x\nf(s(x)) -> s(f(x))\n");
    NormalizeResult r = normalize(trs, parse_term(trs, "f(0)"));
    CHECK(r.status == NormalizeResult::Status::StuckNonValue);
}

TEST_CASE("derivational_length by exhaustive memoized search") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    DlResult r = derivational_length(trs, parse_term(trs, "d(s(s(0)))"));
    REQUIRE_FALSE(r.budget_exceeded);
    CHECK(r.value == 3);

    DlResult value = derivational_length(trs, parse_term(trs, "s(s(0))"));
    CHECK(value.value == 0);

    Trs loop = parse_trs("f(0) -> f(0)\n");
    CHECK(derivational_length(loop, parse_term(loop, "f(0)"), 100).budget_exceeded);
}

TEST_CASE("term_size counts symbol and variable occurrences") {
    Trs trs = parse_trs("VARS x\nf(s(x), 0) -> 0\n");
    CHECK(parse_term(trs, "0").size() == 1);
    CHECK(parse_term(trs, "s(s(0))").size() == 3);
    CHECK(parse_term(trs, "f(s(x), 0)").size() == 4);
}

TEST_CASE("single steps preserve variables and respect the size bound") {
    Trs trs = testsupport::load_fixture("qiex.trs");
    long p = trs.trs_size();
    for (int n = 0; n <= 6; ++n) {
        std::string t = "f(";
        for (int i = 0; i < n; ++i) t += "s(";
        t += "0";
        for (int i = 0; i < n; ++i) t += ")";
        t += ")";
        Term start = parse_term(trs, t);
        for (const Term& next : rewrite_step(trs, start)) {
            auto sv = vars_of(start);
            for (const std::string& v : vars_of(next))
                CHECK(std::find(sv.begin(), sv.end(), v) != sv.end());
            CHECK(next.size() <= start.size() * p);
        }
    }
}

TEST_CASE("size lemma along traced derivations") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    Rational p(trs.trs_size());
    Trace trace = normalize_traced(trs, parse_term(trs, "d(s(s(s(0))))"));
    REQUIRE(trace.status == NormalizeResult::Status::NormalForm);
    Rational bound(trace.states.front().size());
    for (std::size_t n = 0; n < trace.states.size(); ++n) {
        if (n > 0) bound *= p;
        CHECK(Rational(trace.states[n].size()) <= bound);
    }
}

TEST_CASE("orthogonal systems normalize reproducibly") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    Term t = parse_term(trs, "d(s(s(0)))");
    NormalizeResult first = normalize(trs, t);
    for (int i = 0; i < 3; ++i) {
        NormalizeResult again = normalize(trs, t);
        CHECK(again.term == first.term);
        CHECK(again.steps == first.steps);
    }
}

TEST_CASE("derivational_length is zero exactly on normal forms") {
    Trs trs = testsupport::load_fixture("qiex.trs");
    std::vector<std::string> terms{"0", "s(0)", "f(0)", "f(s(0))", "f(s(s(0)))", "s(f(0))"};
    for (const std::string& text : terms) {
        Term t = parse_term(trs, text);
        DlResult dl = derivational_length(trs, t, 1000);
        if (dl.budget_exceeded) continue;  // f(0) loops
        CHECK((dl.value == 0) == rewrite_step(trs, t).empty());
    }
}

TEST_CASE("trs_size sums rule sizes") {
    Trs trs = testsupport::load_fixture("doubling.trs");
    CHECK(trs.trs_size() == 10);  // d(0)->0: 3; d(s(x))->s(s(d(x))): 7
    CHECK(trs.trs_size() >= 2);
}
