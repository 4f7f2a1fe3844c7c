// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supbound/fnparse.hpp"
#include "supbound/rcbridge.hpp"
#include "testsupport.hpp"

using namespace supbound;

namespace {

Trs qiex() { return testsupport::load_fixture("qiex.trs"); }

Assignment make(const Trs& trs, std::initializer_list<std::pair<const char*, const char*>> fns) {
    Assignment a;
    for (auto& [name, text] : fns) {
        int arity = trs.signature.at(*trs.signature.find(name)).arity;
        a.fns[name] = parse_fn(text, arity);
    }
    return a;
}

}  // namespace

TEST_CASE("check_additive accepts the sum-plus-constant template") {
    Trs trs = qiex();
    Assignment a = make(trs, {{"0", "0"}, {"s", "X1 + 1"}, {"f", "X1"}});
    AdditivityReport r = check_additive(a, trs);
    CHECK(r.additive);
    REQUIRE(r.k.has_value());
    CHECK(*r.k == Rational(1));
}

TEST_CASE("check_additive takes the max additive constant") {
    Trs trs = parse_trs("VARS x y\nf(c(x, y)) -> x\n");
    Assignment a = make(trs, {{"c", "X1 + X2 + 2"}, {"f", "X1"}});
    AdditivityReport r = check_additive(a, trs);
    CHECK(r.additive);
    CHECK(*r.k == Rational(2));
}

TEST_CASE("check_additive rejects scaled constructors and relaxes nullaries") {
    Trs trs = qiex();
    Assignment bad = make(trs, {{"0", "0"}, {"s", "2*X1 + 1"}, {"f", "X1"}});
    CHECK_FALSE(check_additive(bad, trs).additive);

    Assignment relaxed = make(trs, {{"0", "1"}, {"s", "X1 + 1"}, {"f", "X1"}});
    CHECK_FALSE(check_additive(relaxed, trs).additive);
    CHECK(check_additive(relaxed, trs, Rational(1)).additive);
    CHECK_FALSE(check_additive(relaxed, trs, Rational(1, 2)).additive);
}

TEST_CASE("check_monotone holds across the algebra") {
    Trs trs = parse_trs("VARS x y\nf(c(x, y)) -> x\n");
    Assignment a = make(trs, {{"c", "X1 + X2 + 1"}, {"f", "max(X1 + 2, 5)"}});
    for (const SymbolVerdict& v : check_monotone(a, trs))
        CHECK(v.verdict == PropertyVerdict::Holds);
}

TEST_CASE("check_strictly_monotone bails out on max and mixed products") {
    Trs trs = parse_trs("VARS x y\nd(x) -> x\ng(x, y) -> x\nh(x, y) -> x\n");
    Assignment a = make(trs, {{"d", "3*X1 + 1"}, {"g", "max(X1, X2)"}, {"h", "X1*X2"}});
    auto verdicts = check_strictly_monotone(a, trs);
    REQUIRE(verdicts.size() == 3);
    CHECK(verdicts[0].verdict == PropertyVerdict::Holds);    // 3X+1
    CHECK(verdicts[1].verdict == PropertyVerdict::Unknown);  // max is not strictly monotone
    CHECK(verdicts[2].verdict == PropertyVerdict::Unknown);  // X*Y alone fails at 0
}

TEST_CASE("check_subterm: identity holds, half fails with a witness, max holds") {
    Trs trs = parse_trs("VARS x y\nf(x) -> x\nhalf(x) -> x\ng(x, y) -> x\n");
    Assignment a =
        make(trs, {{"f", "X1"}, {"half", "1/2*X1 + 1/2"}, {"g", "max(X1, X2)"}});
    auto verdicts = check_subterm(a, trs);
    REQUIRE(verdicts.size() == 3);
    CHECK(verdicts[0].verdict == PropertyVerdict::Holds);
    CHECK(verdicts[1].verdict == PropertyVerdict::Fails);
    REQUIRE(verdicts[1].witness.has_value());
    const Rational& w = (*verdicts[1].witness)[0];
    CHECK(a.fns["half"].eval({w}) < w);  // concrete violation
    CHECK(verdicts[2].verdict == PropertyVerdict::Holds);
}

TEST_CASE("extend_to_term composes homomorphically") {
    Trs trs = testsupport::load_fixture("halflog.trs");
    Assignment a = testsupport::load_assignment(trs, "halflog.si");

    Term x = Term::var("x");
    CHECK(extend_to_term(a, trs, x, {"x"}) == MaxPolyFn::variable(1, 0));

    Term t = parse_term(trs, "log(half(s(s(x))))");
    MaxPolyFn fn = extend_to_term(a, trs, t, {"x"});
    CHECK(fn == parse_fn("X1 + 3", 1));

    Trs q = qiex();
    Assignment qa = testsupport::load_assignment(q, "qiex.si");
    CHECK(extend_to_term(qa, q, parse_term(q, "f(s(x))"), {"x"}) == parse_fn("X1 + 1", 1));
}

TEST_CASE("extend_to_term reports missing mappings") {
    Trs trs = qiex();
    Assignment partial = make(trs, {{"0", "0"}, {"s", "X1 + 1"}});
    CHECK_THROWS_AS(extend_to_term(partial, trs, parse_term(trs, "f(0)"), {}),
                    std::invalid_argument);
}

TEST_CASE("extension is compositional pointwise") {
    Trs trs = testsupport::load_fixture("halflog.trs");
    Assignment a = testsupport::load_assignment(trs, "halflog.si");
    std::mt19937_64 rng(13);
    Term inner = parse_term(trs, "half(s(x))");
    Term outer = parse_term(trs, "log(s(y))");
    // outer[y := inner]
    Substitution sub{{"y", inner}};
    Term whole = substitute(outer, sub);
    MaxPolyFn whole_fn = extend_to_term(a, trs, whole, {"x"});
    MaxPolyFn inner_fn = extend_to_term(a, trs, inner, {"x"});
    MaxPolyFn outer_fn = extend_to_term(a, trs, outer, {"y"});
    for (int i = 0; i < 40; ++i) {
        auto p = testsupport::random_point(rng, 1);
        CHECK(whole_fn.eval(p) == outer_fn.eval({inner_fn.eval(p)}));
    }
}

TEST_CASE("subterm assignments dominate every variable after composition") {
    Trs trs = qiex();
    Assignment a = testsupport::load_assignment(trs, "qiex.si");
    for (const SymbolVerdict& v : check_subterm(a, trs)) REQUIRE(v.verdict == PropertyVerdict::Holds);
    std::mt19937_64 rng(17);
    Term t = parse_term(trs, "f(s(s(x)))");
    MaxPolyFn fn = extend_to_term(a, trs, t, {"x"});
    for (int i = 0; i < 50; ++i) {
        auto p = testsupport::random_point(rng, 1);
        CHECK(fn.eval(p) >= p[0]);
    }
}

TEST_CASE("additive interpretations of values sit between leaf-discounted and scaled size") {
    // theta(v) counts k_c per internal node: size(v) - #nullary <= theta(v)
    // and theta(v) <= k * size(v).
    Trs trs = parse_trs("VARS x y\nf(c(x, y)) -> x\nf(s(x)) -> x\nf(0) -> 0\n");
    Assignment a = make(trs, {{"c", "X1 + X2 + 2"}, {"s", "X1 + 1"}, {"0", "0"}, {"f", "X1"}});
    AdditivityReport add = check_additive(a, trs);
    REQUIRE(add.additive);
    Rational k = *add.k;
    for (int size = 1; size <= 8; ++size) {
        for (const Term& v : constructor_terms(trs, size)) {
            Rational theta = extend_to_term(a, trs, v, {}).eval({});
            long leaves = 0;
            struct Count {
                const Trs& trs;
                long& leaves;
                void run(const Term& t) {
                    if (!t.is_var() && t.args().empty()) ++leaves;
                    for (const Term& s : t.args()) run(s);
                }
            } count{trs, leaves};
            count.run(v);
            CHECK(theta <= k * Rational(v.size()));
            CHECK(theta >= Rational(v.size() - leaves));
        }
    }
}

TEST_CASE("assignments passing subterm have a unit coefficient per argument") {
    // Affine normal forms that pass the subterm check expose, for each
    // argument, some branch with coefficient >= 1.
    Trs trs = parse_trs("VARS x y\ng(x, y) -> x\n");
    for (const char* text : {"max(X1 + 2*X2, X2 + 1)", "max(X1, X2)", "X1 + X2"}) {
        Assignment a = make(trs, {{"g", text}});
        auto verdicts = check_subterm(a, trs);
        bool subterm_ok = true;
        for (const SymbolVerdict& v : verdicts)
            subterm_ok = subterm_ok && v.verdict == PropertyVerdict::Holds;
        if (!subterm_ok) continue;
        const MaxPolyFn& fn = a.fns["g"];
        for (int arg = 0; arg < 2; ++arg) {
            bool some_unit = false;
            for (const Poly& branch : fn.branches) {
                Exponents e(2, 0);
                e[arg] = 1;
                auto it = branch.monos.find(e);
                if (it != branch.monos.end() && it->second >= Rational(1)) some_unit = true;
            }
            CHECK(some_unit);
        }
    }
    // A branchless drop of an argument fails the subterm check outright.
    Assignment weak = make(trs, {{"g", "X1"}});
    CHECK(check_subterm(weak, trs)[0].verdict == PropertyVerdict::Fails);
}

TEST_CASE("assignment files parse and print round trip") {
    Trs trs = qiex();
    Assignment a = testsupport::load_assignment(trs, "qiex.si");
    REQUIRE(a.fns.size() == 3);
    Assignment b = parse_assignment(trs, assignment_to_string(a));
    CHECK(a.fns == b.fns);
    CHECK_THROWS_AS(parse_assignment(trs, "unknown = X1\n"), std::invalid_argument);
}

TEST_CASE("marked symbols inherit the base mapping") {
    Trs trs = qiex();
    Assignment a = testsupport::load_assignment(trs, "qiex.si");
    REQUIRE(a.find_marked("f") != nullptr);
    CHECK(*a.find_marked("f") == a.fns["f"]);
    a.fns["f#"] = parse_fn("2*X1", 1);
    CHECK(*a.find_marked("f") == parse_fn("2*X1", 1));
}
