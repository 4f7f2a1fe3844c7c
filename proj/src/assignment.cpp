// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/assignment.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "supbound/fnparse.hpp"

namespace supbound {

const MaxPolyFn* Assignment::find(const std::string& name) const {
    auto it = fns.find(name);
    return it == fns.end() ? nullptr : &it->second;
}

const MaxPolyFn* Assignment::find_marked(const std::string& base_name) const {
    if (const MaxPolyFn* f = find(base_name + "#")) return f;
    return find(base_name);
}

std::vector<std::string> Assignment::missing_on(const Trs& trs) const {
    std::vector<std::string> out;
    for (const Symbol& s : trs.signature.symbols())
        if (!find(s.name)) out.push_back(s.name);
    return out;
}

Assignment parse_assignment(const Trs& trs, const std::string& text) {
    Assignment a;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto nonspace = line.find_first_not_of(" \t\r");
        if (nonspace == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("assignment line " + std::to_string(lineno) +
                                        ": expected 'symbol = fn'");
        std::string name = line.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty())
            throw std::invalid_argument("assignment line " + std::to_string(lineno) +
                                        ": empty symbol name");
        auto id = trs.signature.find(name);
        if (!id)
            throw std::invalid_argument("assignment line " + std::to_string(lineno) +
                                        ": unknown symbol '" + name + "'");
        int arity = trs.signature.at(*id).arity;
        a.fns[name] = parse_fn(line.substr(eq + 1), arity);
    }
    return a;
}

std::string assignment_to_string(const Assignment& a) {
    std::string out;
    for (const auto& [name, fn] : a.fns) out += name + " = " + fn_to_string(fn) + "\n";
    return out;
}

namespace {

// Exactly X1+...+Xn + kc for some kc; returns kc on match.
std::optional<Rational> additive_constant(const MaxPolyFn& f) {
    if (f.branches.size() != 1) return std::nullopt;
    const Poly& p = f.branches.front();
    Rational kc(0);
    std::vector<bool> seen(f.arity, false);
    for (const auto& [exps, coeff] : p.monos) {
        unsigned total = 0;
        int var = -1;
        for (int i = 0; i < f.arity; ++i) {
            total += exps[i];
            if (exps[i] > 0) var = i;
        }
        if (total == 0) {
            kc = coeff;
        } else if (total == 1) {
            if (coeff != Rational(1)) return std::nullopt;
            seen[var] = true;
        } else {
            return std::nullopt;
        }
    }
    for (bool s : seen)
        if (!s) return std::nullopt;
    return kc;
}

}  // namespace

AdditivityReport check_additive(const Assignment& a, const Trs& trs,
                                const std::optional<Rational>& relax_nullary) {
    AdditivityReport report;
    report.additive = true;
    Rational k(1);
    bool any_positive_arity = false;
    for (int id : trs.constructor_symbols()) {
        const Symbol& sym = trs.signature.at(id);
        const MaxPolyFn* f = a.find(sym.name);
        if (!f) throw std::invalid_argument("missing constructor mapping for '" + sym.name + "'");
        ConstructorDiag diag{sym.name, false, ""};
        if (sym.arity == 0) {
            if (f->branches.size() == 1 && f->branches.front().degree() == 0) {
                Rational c = f->eval({});
                Rational bound = relax_nullary.value_or(Rational(0));
                if (c <= bound) {
                    diag.ok = true;
                    diag.detail = "constant " + c.str();
                } else {
                    diag.detail = "constant " + c.str() + " exceeds nullary bound " + bound.str();
                }
            } else {
                diag.detail = "nullary constructor must map to a constant";
            }
        } else {
            auto kc = additive_constant(*f);
            if (kc && *kc >= Rational(1)) {
                diag.ok = true;
                diag.detail = "k = " + kc->str();
                k = Rational::max(k, *kc);
                any_positive_arity = true;
            } else {
                diag.detail = "not of the shape X1+...+Xn + k with k >= 1";
            }
        }
        report.additive = report.additive && diag.ok;
        report.per_constructor.push_back(std::move(diag));
    }
    if (report.additive) report.k = any_positive_arity ? k : Rational(1);
    return report;
}

std::vector<SymbolVerdict> check_monotone(const Assignment& a, const Trs& trs) {
    std::vector<SymbolVerdict> out;
    for (const Symbol& sym : trs.signature.symbols()) {
        const MaxPolyFn* f = a.find(sym.name);
        if (!f) continue;
        // Nonnegative coefficients make every branch (and the max) monotone.
        out.push_back({sym.name, PropertyVerdict::Holds, std::nullopt,
                       "nonnegative coefficients are weakly monotone"});
    }
    return out;
}

std::vector<SymbolVerdict> check_strictly_monotone(const Assignment& a, const Trs& trs) {
    std::vector<SymbolVerdict> out;
    for (const Symbol& sym : trs.signature.symbols()) {
        const MaxPolyFn* f = a.find(sym.name);
        if (!f) continue;
        SymbolVerdict v{sym.name, PropertyVerdict::Holds, std::nullopt, ""};
        for (int arg = 0; arg < sym.arity && v.verdict == PropertyVerdict::Holds; ++arg) {
            for (const Poly& branch : f->branches) {
                bool has_pure_power = false;
                for (const auto& [exps, coeff] : branch.monos) {
                    bool pure = exps[arg] > 0;
                    for (int i = 0; i < f->arity && pure; ++i)
                        if (i != arg && exps[i] > 0) pure = false;
                    if (pure) has_pure_power = true;
                }
                if (!has_pure_power) {
                    v.verdict = PropertyVerdict::Unknown;
                    v.detail = "branch " + poly_to_string(branch) +
                               " has no pure monomial in X" + std::to_string(arg + 1);
                    break;
                }
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SymbolVerdict> check_subterm(const Assignment& a, const Trs& trs,
                                         const SamplePlan& plan) {
    std::vector<SymbolVerdict> out;
    for (const Symbol& sym : trs.signature.symbols()) {
        const MaxPolyFn* f = a.find(sym.name);
        if (!f) continue;
        SymbolVerdict v{sym.name, PropertyVerdict::Holds, std::nullopt, ""};
        for (int arg = 0; arg < sym.arity; ++arg) {
            MaxPolyFn projection = MaxPolyFn::variable(sym.arity, arg);
            GeqCnf cnf = decompose_geq(*f, projection);
            bool holds = true;
            for (const GeqClause& clause : cnf.clauses)
                holds = holds && check_clause_uniform(clause) == ClauseVerdict::Holds;
            if (holds) continue;
            if (auto w = refute_by_sampling(*f, projection, plan)) {
                v.verdict = PropertyVerdict::Fails;
                v.witness = *w;
                v.detail = "argument X" + std::to_string(arg + 1) + " not dominated";
                break;
            }
            v.verdict = PropertyVerdict::Unknown;
            v.detail = "argument X" + std::to_string(arg + 1) + ": no dominating branch found";
        }
        out.push_back(std::move(v));
    }
    return out;
}

MaxPolyFn extend_to_term(const Assignment& a, const Trs& trs, const Term& t,
                         const std::vector<std::string>& var_order) {
    int arity = static_cast<int>(var_order.size());
    if (t.is_var()) {
        auto it = std::find(var_order.begin(), var_order.end(), t.var_name());
        if (it == var_order.end())
            throw std::invalid_argument("variable '" + t.var_name() + "' not in variable order");
        return MaxPolyFn::variable(arity, static_cast<int>(it - var_order.begin()));
    }
    const Symbol& sym = trs.signature.at(t.symbol());
    const MaxPolyFn* f = a.find(sym.name);
    if (!f) throw std::invalid_argument("missing symbol mapping for '" + sym.name + "'");
    if (t.args().empty() && f->arity == 0 && arity == 0) return *f;
    std::vector<MaxPolyFn> args;
    args.reserve(t.args().size());
    for (const Term& sub : t.args()) args.push_back(extend_to_term(a, trs, sub, var_order));
    if (t.args().empty()) {
        // Lift a nullary constant into the ambient arity.
        return MaxPolyFn::constant(arity, f->eval({}));
    }
    return compose(*f, args);
}

}  // namespace supbound
