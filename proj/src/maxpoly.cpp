// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/maxpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace supbound {

Poly Poly::constant(int arity, const Rational& c) {
    Poly p{arity, {}};
    if (!c.is_nonnegative()) throw std::invalid_argument("negative coefficient");
    if (!c.is_zero()) p.monos.emplace(Exponents(arity, 0), c);
    return p;
}

Poly Poly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
    Poly p{arity, {}};
    Exponents e(arity, 0);
    e[index] = 1;
    p.monos.emplace(std::move(e), Rational(1));
    return p;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [exps, coeff] : monos) {
        unsigned total = 0;
        for (unsigned e : exps) total += e;
        d = std::max(d, total);
    }
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    if (arity != o.arity) throw std::invalid_argument("polynomial arity mismatch");
    Poly out = *this;
    for (const auto& [exps, coeff] : o.monos) {
        auto [it, inserted] = out.monos.emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.monos.erase(it);
        }
    }
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (arity != o.arity) throw std::invalid_argument("polynomial arity mismatch");
    Poly out{arity, {}};
    for (const auto& [ea, ca] : monos) {
        for (const auto& [eb, cb] : o.monos) {
            Exponents e(arity, 0);
            for (int i = 0; i < arity; ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, inserted] = out.monos.emplace(std::move(e), c);
            if (!inserted) it->second += c;
        }
    }
    return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity)
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational total(0);
    for (const auto& [exps, coeff] : monos) {
        Rational term = coeff;
        for (int i = 0; i < arity; ++i)
            if (exps[i] > 0) term *= Rational::pow(point[i], exps[i]);
        total += term;
    }
    return total;
}

MaxPolyFn MaxPolyFn::from_branches(int arity, std::vector<Poly> branches) {
    if (branches.empty()) throw std::invalid_argument("max of zero branches");
    for (const Poly& b : branches)
        if (b.arity != arity) throw std::invalid_argument("branch arity mismatch");
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
    return MaxPolyFn{arity, std::move(branches)};
}

MaxPolyFn MaxPolyFn::constant(int arity, const Rational& c) {
    return from_branches(arity, {Poly::constant(arity, c)});
}

MaxPolyFn MaxPolyFn::variable(int arity, int index) {
    return from_branches(arity, {Poly::variable(arity, index)});
}

Rational MaxPolyFn::eval(const std::vector<Rational>& point) const {
    Rational best = branches.front().eval(point);
    for (std::size_t i = 1; i < branches.size(); ++i)
        best = Rational::max(best, branches[i].eval(point));
    return best;
}

MaxPolyFn MaxPolyFn::plus_const(const Rational& c) const {
    std::vector<Poly> out;
    out.reserve(branches.size());
    for (const Poly& b : branches) out.push_back(b + Poly::constant(arity, c));
    return from_branches(arity, std::move(out));
}

FnExpr FnExpr::variable(int index) {
    FnExpr e;
    e.kind = Kind::Var;
    e.var = index;
    return e;
}

FnExpr FnExpr::constant(Rational c) {
    FnExpr e;
    e.kind = Kind::Const;
    e.value = std::move(c);
    return e;
}

static FnExpr node(FnExpr::Kind kind, std::vector<FnExpr> kids) {
    if (kids.empty()) throw std::invalid_argument("empty expression node");
    FnExpr e;
    e.kind = kind;
    e.kids = std::move(kids);
    return e;
}

FnExpr FnExpr::add(std::vector<FnExpr> kids) { return node(Kind::Add, std::move(kids)); }
FnExpr FnExpr::mul(std::vector<FnExpr> kids) { return node(Kind::Mul, std::move(kids)); }
FnExpr FnExpr::max(std::vector<FnExpr> kids) { return node(Kind::Max, std::move(kids)); }

Rational eval_expr(const FnExpr& e, const std::vector<Rational>& point) {
    switch (e.kind) {
        case FnExpr::Kind::Var:
            return point.at(e.var);
        case FnExpr::Kind::Const:
            return e.value;
        case FnExpr::Kind::Add: {
            Rational total(0);
            for (const FnExpr& k : e.kids) total += eval_expr(k, point);
            return total;
        }
        case FnExpr::Kind::Mul: {
            Rational total(1);
            for (const FnExpr& k : e.kids) total *= eval_expr(k, point);
            return total;
        }
        case FnExpr::Kind::Max: {
            Rational best = eval_expr(e.kids.front(), point);
            for (std::size_t i = 1; i < e.kids.size(); ++i)
                best = Rational::max(best, eval_expr(e.kids[i], point));
            return best;
        }
    }
    throw std::logic_error("unreachable");
}

MaxPolyFn mp_add(const MaxPolyFn& a, const MaxPolyFn& b) {
    std::vector<Poly> out;
    out.reserve(a.branches.size() * b.branches.size());
    for (const Poly& p : a.branches)
        for (const Poly& q : b.branches) out.push_back(p + q);
    return MaxPolyFn::from_branches(a.arity, std::move(out));
}

MaxPolyFn mp_mul(const MaxPolyFn& a, const MaxPolyFn& b) {
    std::vector<Poly> out;
    out.reserve(a.branches.size() * b.branches.size());
    for (const Poly& p : a.branches)
        for (const Poly& q : b.branches) out.push_back(p * q);
    return MaxPolyFn::from_branches(a.arity, std::move(out));
}

MaxPolyFn mp_max(const MaxPolyFn& a, const MaxPolyFn& b) {
    std::vector<Poly> out = a.branches;
    out.insert(out.end(), b.branches.begin(), b.branches.end());
    return MaxPolyFn::from_branches(a.arity, std::move(out));
}

MaxPolyFn normalize_fn(const FnExpr& e, int arity) {
    switch (e.kind) {
        case FnExpr::Kind::Var:
            return MaxPolyFn::variable(arity, e.var);
        case FnExpr::Kind::Const:
            return MaxPolyFn::constant(arity, e.value);
        case FnExpr::Kind::Add: {
            MaxPolyFn acc = normalize_fn(e.kids.front(), arity);
            for (std::size_t i = 1; i < e.kids.size(); ++i)
                acc = mp_add(acc, normalize_fn(e.kids[i], arity));
            return acc;
        }
        case FnExpr::Kind::Mul: {
            MaxPolyFn acc = normalize_fn(e.kids.front(), arity);
            for (std::size_t i = 1; i < e.kids.size(); ++i)
                acc = mp_mul(acc, normalize_fn(e.kids[i], arity));
            return acc;
        }
        case FnExpr::Kind::Max: {
            MaxPolyFn acc = normalize_fn(e.kids.front(), arity);
            for (std::size_t i = 1; i < e.kids.size(); ++i)
                acc = mp_max(acc, normalize_fn(e.kids[i], arity));
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

static MaxPolyFn compose_poly(const Poly& p, const std::vector<MaxPolyFn>& args, int out_arity) {
    MaxPolyFn acc = MaxPolyFn::zero(out_arity);
    bool first = true;
    for (const auto& [exps, coeff] : p.monos) {
        MaxPolyFn term = MaxPolyFn::constant(out_arity, coeff);
        for (int i = 0; i < p.arity; ++i)
            for (unsigned e = 0; e < exps[i]; ++e) term = mp_mul(term, args[i]);
        acc = first ? term : mp_add(acc, term);
        first = false;
    }
    return acc;
}

MaxPolyFn compose(const MaxPolyFn& f, const std::vector<MaxPolyFn>& args) {
    if (static_cast<int>(args.size()) != f.arity)
        throw std::invalid_argument("compose arity mismatch");
    int out_arity = args.empty() ? 0 : args.front().arity;
    for (const MaxPolyFn& a : args)
        if (a.arity != out_arity) throw std::invalid_argument("compose argument arity mismatch");
    MaxPolyFn acc = compose_poly(f.branches.front(), args, out_arity);
    for (std::size_t i = 1; i < f.branches.size(); ++i)
        acc = mp_max(acc, compose_poly(f.branches[i], args, out_arity));
    return acc;
}

GeqCnf decompose_geq(const MaxPolyFn& q, const MaxPolyFn& qprime) {
    if (q.arity != qprime.arity) throw std::invalid_argument("decompose arity mismatch");
    GeqCnf cnf;
    for (const Poly& rj : qprime.branches) {
        GeqClause clause;
        for (const Poly& pi : q.branches) clause.atoms.push_back(GeqAtom{pi, rj});
        cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

Domination poly_dominates(const Poly& p, const Poly& r) {
    if (p.arity != r.arity) throw std::invalid_argument("domination arity mismatch");
    // Keywise difference; any negative coefficient defeats the criterion.
    std::map<Exponents, Rational> diff = p.monos;
    for (const auto& [exps, coeff] : r.monos) {
        auto [it, inserted] = diff.emplace(exps, Rational(0) - coeff);
        if (!inserted) it->second -= coeff;
    }
    for (const auto& [exps, coeff] : diff)
        if (!coeff.is_nonnegative()) return Domination::Unknown;
    return Domination::True;
}

ClauseVerdict check_clause_uniform(const GeqClause& clause) {
    for (const GeqAtom& atom : clause.atoms)
        if (poly_dominates(atom.lhs, atom.rhs) == Domination::True) return ClauseVerdict::Holds;
    return ClauseVerdict::Unknown;
}

namespace {

bool witnesses(const MaxPolyFn& q, const MaxPolyFn& qprime, const std::vector<Rational>& point) {
    return q.eval(point) < qprime.eval(point);
}

}  // namespace

std::optional<std::vector<Rational>> refute_by_sampling(const MaxPolyFn& q, const MaxPolyFn& qprime,
                                                        const SamplePlan& plan) {
    if (q.arity != qprime.arity) throw std::invalid_argument("refutation arity mismatch");
    int n = q.arity;
    if (n == 0) {
        std::vector<Rational> empty;
        if (witnesses(q, qprime, empty)) return empty;
        return std::nullopt;
    }

    std::vector<Rational> grid_values;
    for (Rational v(0); v <= plan.grid_max; v += plan.grid_step) grid_values.push_back(v);

    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> point(n, Rational(0));
    long emitted = 0;
    while (emitted < plan.grid_cap) {
        for (int i = 0; i < n; ++i) point[i] = grid_values[idx[i]];
        if (witnesses(q, qprime, point)) return point;
        ++emitted;
        int pos = n - 1;
        while (pos >= 0) {
            if (++idx[pos] < grid_values.size()) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    std::mt19937_64 rng(plan.seed);
    std::uniform_int_distribution<int> num(0, plan.random_max_numden);
    std::uniform_int_distribution<int> den(1, plan.random_max_numden);
    for (int r = 0; r < plan.random_count; ++r) {
        for (int i = 0; i < n; ++i) point[i] = Rational(num(rng), den(rng));
        if (witnesses(q, qprime, point)) return point;
    }
    return std::nullopt;
}

Degrees degrees(const MaxPolyFn& f) {
    Degrees d;
    d.maxdegree = static_cast<unsigned>(f.branches.size());
    for (const Poly& b : f.branches) d.xdegree = std::max(d.xdegree, b.degree());
    bool affine = true;
    for (const Poly& b : f.branches) affine = affine && b.is_affine();
    if (affine) {
        Rational best(0);
        for (const Poly& b : f.branches)
            for (const auto& [exps, coeff] : b.monos) best = Rational::max(best, coeff);
        d.plusdegree = best;
    }
    return d;
}

double eval_approx(const MaxPolyFn& f, const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != f.arity)
        throw std::invalid_argument("evaluation point arity mismatch");
    double best = 0.0;
    bool first = true;
    for (const Poly& branch : f.branches) {
        double total = 0.0;
        for (const auto& [exps, coeff] : branch.monos) {
            double term = coeff.approx();
            for (int i = 0; i < f.arity; ++i)
                for (unsigned e = 0; e < exps[i]; ++e) term *= point[i];
            total += term;
        }
        best = first ? total : std::max(best, total);
        first = false;
    }
    return best;
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.monos.rbegin(); it != p.monos.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        if (!first) out += " + ";
        first = false;
        bool has_vars = false;
        for (unsigned e : exps) has_vars = has_vars || e > 0;
        if (!has_vars) {
            out += coeff.str();
            continue;
        }
        std::string vars;
        for (int i = 0; i < p.arity; ++i) {
            if (exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "X" + std::to_string(i + 1);
            if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
        }
        if (coeff == Rational(1)) {
            out += vars;
        } else {
            out += coeff.str() + "*" + vars;
        }
    }
    return out;
}

std::string fn_to_string(const MaxPolyFn& f) {
    if (f.branches.size() == 1) return poly_to_string(f.branches.front());
    std::string out = "max(";
    for (std::size_t i = 0; i < f.branches.size(); ++i) {
        if (i) out += ", ";
        out += poly_to_string(f.branches[i]);
    }
    return out + ")";
}

}  // namespace supbound
