// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supbound/rational.hpp"

namespace supbound {

/// Exponent vector over the formal arguments X1..Xn; length equals arity.
using Exponents = std::vector<unsigned>;

/// Multivariate polynomial with nonnegative coefficients in canonical form:
/// monomials keyed by exponent vector, zero coefficients removed. The empty
/// monomial map is the zero polynomial.
struct Poly {
    int arity = 0;
    std::map<Exponents, Rational> monos;

    static Poly zero(int arity) { return Poly{arity, {}}; }
    static Poly constant(int arity, const Rational& c);
    static Poly variable(int arity, int index);

    bool is_zero() const { return monos.empty(); }
    unsigned degree() const;
    bool is_affine() const { return degree() <= 1; }

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Rational eval(const std::vector<Rational>& point) const;

    bool operator==(const Poly& o) const { return arity == o.arity && monos == o.monos; }
    bool operator<(const Poly& o) const { return monos < o.monos; }
};

/// Function in normal form max(P1,...,Pk): branches are sorted, deduplicated
/// and never empty.
struct MaxPolyFn {
    int arity = 0;
    std::vector<Poly> branches;

    static MaxPolyFn from_branches(int arity, std::vector<Poly> branches);
    static MaxPolyFn constant(int arity, const Rational& c);
    static MaxPolyFn variable(int arity, int index);
    static MaxPolyFn zero(int arity) { return from_branches(arity, {Poly::zero(arity)}); }

    Rational eval(const std::vector<Rational>& point) const;

    /// Pointwise f + c on every branch.
    MaxPolyFn plus_const(const Rational& c) const;

    bool operator==(const MaxPolyFn& o) const { return arity == o.arity && branches == o.branches; }
};

/// Expression tree over variables, nonnegative constants, +, x and max.
struct FnExpr {
    enum class Kind { Var, Const, Add, Mul, Max };
    Kind kind = Kind::Const;
    int var = 0;
    Rational value;
    std::vector<FnExpr> kids;

    static FnExpr variable(int index);
    static FnExpr constant(Rational c);
    static FnExpr add(std::vector<FnExpr> kids);
    static FnExpr mul(std::vector<FnExpr> kids);
    static FnExpr max(std::vector<FnExpr> kids);
};

/// Direct semantics of an expression; the independent reference for
/// normalize_fn.
Rational eval_expr(const FnExpr& e, const std::vector<Rational>& point);

/// Pointwise-equal normal form, obtained by extruding max over + and x.
MaxPolyFn normalize_fn(const FnExpr& e, int arity);

MaxPolyFn mp_add(const MaxPolyFn& a, const MaxPolyFn& b);
MaxPolyFn mp_mul(const MaxPolyFn& a, const MaxPolyFn& b);
MaxPolyFn mp_max(const MaxPolyFn& a, const MaxPolyFn& b);

/// Substitute args[i] for Xi in f; args share one arity.
MaxPolyFn compose(const MaxPolyFn& f, const std::vector<MaxPolyFn>& args);

/// One atom P >= R of a decomposed inequality.
struct GeqAtom {
    Poly lhs;
    Poly rhs;
};
/// Disjunction of atoms, one clause per branch of the right-hand function.
struct GeqClause {
    std::vector<GeqAtom> atoms;
};
struct GeqCnf {
    std::vector<GeqClause> clauses;
};

/// q >= q' decomposed branchwise: for each branch Rj of q', the disjunction
/// over branches Pi of q of (Pi >= Rj). Pointwise equivalent to the original
/// inequality at every point >= 0.
GeqCnf decompose_geq(const MaxPolyFn& q, const MaxPolyFn& qprime);

enum class Domination { True, Unknown };

/// Sound sufficient criterion for "p(x) >= r(x) for all x >= 0": every
/// coefficient of p - r is nonnegative. Complete for affine p, r over the
/// nonnegative orthant.
Domination poly_dominates(const Poly& p, const Poly& r);

enum class ClauseVerdict { Holds, Unknown };

/// Holds iff a single atom of the disjunction dominates uniformly. Strictly
/// weaker than pointwise truth of the disjunction; Unknown is not a refutation.
ClauseVerdict check_clause_uniform(const GeqClause& clause);

struct SamplePlan {
    Rational grid_max = Rational(10);
    Rational grid_step = Rational(1, 4);
    long grid_cap = 100'000;
    int random_count = 1'000;
    int random_max_numden = 32;
    unsigned long seed = 20230501;
};

/// Search the plan (grid then seeded random rationals) for a point x >= 0
/// with q(x) < q'(x). Absence of a witness is not a proof.
std::optional<std::vector<Rational>> refute_by_sampling(const MaxPolyFn& q, const MaxPolyFn& qprime,
                                                        const SamplePlan& plan = SamplePlan{});

struct Degrees {
    unsigned xdegree = 0;
    unsigned maxdegree = 1;
    std::optional<Rational> plusdegree;  // defined only on the affine fragment
};

Degrees degrees(const MaxPolyFn& f);

/// Tolerance for the approximate evaluation mode below.
inline constexpr double kApproxTolerance = 1e-9;

/// Double-precision evaluation. NOT certifying: real-valued images can only
/// be inspected this way, and comparisons must allow kApproxTolerance. All
/// verification and synthesis paths use exact rationals instead.
double eval_approx(const MaxPolyFn& f, const std::vector<double>& point);

std::string poly_to_string(const Poly& p);
std::string fn_to_string(const MaxPolyFn& f);

}  // namespace supbound
