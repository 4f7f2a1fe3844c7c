// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/synthesizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "supbound/linear.hpp"

namespace supbound {

std::vector<Rational> coefficient_grid(const SynthesisConfig& cfg) {
    std::vector<Rational> out;
    if (cfg.domain == Domain::Naturals) {
        for (int v = 0; v <= cfg.coeff_bound; ++v) out.push_back(Rational(v));
        return out;
    }
    // Numerator and denominator stay within the representation bound; the
    // coefficient bound caps the value itself.
    Rational cap(cfg.coeff_bound);
    out.push_back(Rational(0));
    for (int num = 1; num <= cfg.rat_bound; ++num) {
        for (int den = 1; den <= cfg.rat_bound; ++den) {
            if (std::gcd(num, den) != 1) continue;
            Rational v(num, den);
            if (v <= cap) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

long numerator_grade(const Rational& r) {
    // Grid numerators are tiny by construction.
    return static_cast<long>(r.numerator().get_si());
}

long branch_grade(const std::vector<Rational>& coeffs) {
    long g = 0;
    for (const Rational& c : coeffs) g += numerator_grade(c);
    return g;
}

Poly affine_branch(int arity, const std::vector<Rational>& coeffs) {
    // coeffs = (alpha_1..alpha_n, constant)
    Poly p = Poly::zero(arity);
    for (int i = 0; i < arity; ++i) {
        if (coeffs[i].is_zero()) continue;
        Exponents e(arity, 0);
        e[i] = 1;
        p.monos.emplace(std::move(e), coeffs[i]);
    }
    if (!coeffs[arity].is_zero()) p.monos.emplace(Exponents(arity, 0), coeffs[arity]);
    return p;
}

}  // namespace

std::vector<CandidateFn> candidate_functions(const Trs& trs, int symbol,
                                             const SynthesisConfig& cfg) {
    const Symbol& sym = trs.signature.at(symbol);
    std::vector<Rational> grid = coefficient_grid(cfg);
    std::vector<CandidateFn> out;

    if (sym.kind == SymbolKind::Constructor) {
        if (sym.arity == 0) {
            if (!cfg.nullary_relax) {
                out.push_back({MaxPolyFn::constant(0, Rational(0)), 1});
            } else {
                for (const Rational& v : grid) {
                    if (v > *cfg.nullary_relax) continue;
                    out.push_back({MaxPolyFn::constant(0, v), numerator_grade(v) + 1});
                }
            }
        } else {
            for (const Rational& kc : grid) {
                if (kc < Rational(1)) continue;
                std::vector<Rational> coeffs(sym.arity, Rational(1));
                coeffs.push_back(kc);
                out.push_back({MaxPolyFn::from_branches(sym.arity, {affine_branch(sym.arity, coeffs)}),
                               branch_grade(coeffs) + 1});
            }
        }
    } else {
        // Every affine branch over the grid, then sets of at most k of them.
        struct Branch {
            Poly poly;
            long grade;
        };
        std::vector<Branch> branches;
        std::vector<Rational> coeffs(sym.arity + 1, Rational(0));
        std::vector<std::size_t> idx(sym.arity + 1, 0);
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i) coeffs[i] = grid[idx[i]];
            branches.push_back({affine_branch(sym.arity, coeffs), branch_grade(coeffs)});
            std::size_t pos = idx.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < grid.size()) break;
                idx[pos] = 0;
                if (pos == 0) goto done;
            }
        }
    done:
        std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
            if (a.grade != b.grade) return a.grade < b.grade;
            return a.poly < b.poly;
        });
        // Distinct polynomials only (alpha=0 collapses grid points).
        branches.erase(std::unique(branches.begin(), branches.end(),
                                   [](const Branch& a, const Branch& b) { return a.poly == b.poly; }),
                       branches.end());

        int k = std::max(1, cfg.max_branches);
        std::vector<std::size_t> combo;
        auto emit = [&]() {
            std::vector<Poly> polys;
            long grade = static_cast<long>(combo.size());
            for (std::size_t i : combo) {
                polys.push_back(branches[i].poly);
                grade += branches[i].grade;
            }
            out.push_back({MaxPolyFn::from_branches(sym.arity, std::move(polys)), grade});
        };
        struct Rec {
            std::vector<std::size_t>& combo;
            const std::vector<Branch>& branches;
            int k;
            const std::function<void()>& emit;
            void run(std::size_t from) {
                if (!combo.empty()) emit();
                if (static_cast<int>(combo.size()) == k) return;
                for (std::size_t i = from; i < branches.size(); ++i) {
                    combo.push_back(i);
                    run(i + 1);
                    combo.pop_back();
                }
            }
        };
        std::function<void()> emit_fn = emit;
        Rec rec{combo, branches, k, emit_fn};
        rec.run(0);
    }
    // The enumerator breaks on ascending grades; keep every list sorted.
    std::stable_sort(out.begin(), out.end(),
                     [](const CandidateFn& a, const CandidateFn& b) { return a.grade < b.grade; });
    return out;
}

namespace {

struct ConstraintSpec {
    enum class Kind { Rule, Dp, Subterm } kind;
    int index = 0;        // rule index or dp index
    int symbol = -1;      // for Subterm
    std::set<int> symbols;  // signature ids the constraint depends on
};

std::set<int> term_symbols(const Term& t) {
    std::set<int> out;
    struct Walk {
        std::set<int>& out;
        void run(const Term& t) {
            if (t.is_var()) return;
            out.insert(t.symbol());
            for (const Term& a : t.args()) run(a);
        }
    } walk{out};
    walk.run(t);
    return out;
}

struct Enumeration {
    const Trs& trs;
    const SynthesisConfig& cfg;
    std::vector<DependencyPair> dps;
    std::vector<ConstraintSpec> constraints;
    std::vector<int> order;                        // symbol ids, assignment order
    std::vector<std::vector<CandidateFn>> lists;   // per order position
    std::vector<std::vector<int>> checks_at;       // constraint indices per level
    std::vector<long> min_suffix, max_suffix;

    Assignment current;
    SynthesisResult result;
    std::chrono::steady_clock::time_point deadline;
    long nodes = 0;
    bool stop = false;

    bool holds_uniform(const MaxPolyFn& lhs, const MaxPolyFn& rhs) const {
        GeqCnf cnf = decompose_geq(lhs, rhs);
        for (const GeqClause& clause : cnf.clauses)
            if (check_clause_uniform(clause) != ClauseVerdict::Holds) return false;
        return true;
    }

    bool constraint_holds(const ConstraintSpec& c) const {
        if (c.kind == ConstraintSpec::Kind::Subterm) {
            const Symbol& sym = trs.signature.at(c.symbol);
            const MaxPolyFn* f = current.find(sym.name);
            for (int arg = 0; arg < sym.arity; ++arg)
                if (!holds_uniform(*f, MaxPolyFn::variable(sym.arity, arg))) return false;
            return true;
        }
        const Term& l = c.kind == ConstraintSpec::Kind::Rule ? trs.rules[c.index].lhs
                                                             : dps[c.index].lhs;
        const Term& r = c.kind == ConstraintSpec::Kind::Rule ? trs.rules[c.index].rhs
                                                             : dps[c.index].rhs;
        std::vector<std::string> vars = vars_of(l);
        return holds_uniform(extend_to_term(current, trs, l, vars),
                             extend_to_term(current, trs, r, vars));
    }

    bool timed_out() {
        if ((++nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) stop = true;
        return stop;
    }

    // Returns true when the search should stop (found or timed out).
    bool rec(std::size_t level, long remaining) {
        if (timed_out()) return true;
        if (level == order.size()) {
            if (remaining != 0) return false;
            ++result.candidates_tried;
            VerifyOptions opts;
            opts.relax_nullary = cfg.nullary_relax;
            opts.plan = cfg.plan;
            VerificationReport report = cfg.kind == CriterionKind::DPI
                                            ? verify_dpi(trs, current, opts)
                                            : verify_qi(trs, current, opts);
            if (report.overall == Overall::Valid) {
                result.status = SynthesisResult::Status::Found;
                result.assignment = current;
                result.certificate = std::move(report);
                return true;
            }
            return false;
        }
        const Symbol& sym = trs.signature.at(order[level]);
        long lo = level + 1 < order.size() ? min_suffix[level + 1] : 0;
        long hi = level + 1 < order.size() ? max_suffix[level + 1] : 0;
        for (const CandidateFn& cand : lists[level]) {
            long rem2 = remaining - cand.grade;
            if (rem2 < lo) break;  // grades ascend
            if (rem2 > hi) continue;
            current.fns[sym.name] = cand.fn;
            bool pruned = false;
            for (int ci : checks_at[level]) {
                if (!constraint_holds(constraints[ci])) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned) {
                if (rec(level + 1, rem2)) return true;
            } else {
                ++result.candidates_tried;
            }
            if (stop) return true;
        }
        current.fns.erase(sym.name);
        return false;
    }
};

}  // namespace

SynthesisResult synthesize(const Trs& trs, const SynthesisConfig& cfg) {
    Enumeration e{trs, cfg};
    e.deadline = std::chrono::steady_clock::now() + cfg.time_budget;
    e.dps = cfg.kind == CriterionKind::DPI ? dependency_pairs(trs) : std::vector<DependencyPair>{};

    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        std::set<int> syms = term_symbols(trs.rules[i].lhs);
        std::set<int> rsyms = term_symbols(trs.rules[i].rhs);
        syms.insert(rsyms.begin(), rsyms.end());
        e.constraints.push_back({ConstraintSpec::Kind::Rule, static_cast<int>(i), -1, syms});
    }
    for (std::size_t i = 0; i < e.dps.size(); ++i) {
        std::set<int> syms = term_symbols(e.dps[i].lhs);
        std::set<int> rsyms = term_symbols(e.dps[i].rhs);
        syms.insert(rsyms.begin(), rsyms.end());
        e.constraints.push_back({ConstraintSpec::Kind::Dp, static_cast<int>(i), -1, syms});
    }
    if (cfg.kind == CriterionKind::QI) {
        for (int s : trs.defined_symbols())
            e.constraints.push_back({ConstraintSpec::Kind::Subterm, 0, s, {s}});
    }

    // Assignment order: greedily pick the symbol that completes the most
    // still-open constraints, so rule checks prune as early as possible.
    std::map<int, std::vector<CandidateFn>> all_lists;
    std::vector<int> unassigned;
    for (int s = 0; s < trs.signature.size(); ++s) {
        all_lists.emplace(s, candidate_functions(trs, s, cfg));
        unassigned.push_back(s);
    }
    std::set<int> assigned;
    while (!unassigned.empty()) {
        int best = -1;
        std::tuple<long, long, long> best_key;
        for (int s : unassigned) {
            long completes = 0;
            long closest = 1'000'000;
            for (const ConstraintSpec& c : e.constraints) {
                long open = 0;
                bool involves = false;
                for (int cs : c.symbols) {
                    if (cs == s) involves = true;
                    if (!assigned.count(cs)) ++open;
                }
                if (!involves || assigned.count(s)) continue;
                if (open == 1) ++completes;
                if (open > 0) closest = std::min(closest, open);
            }
            std::tuple<long, long, long> key{-completes, closest,
                                             static_cast<long>(all_lists[s].size())};
            if (best == -1 || key < best_key) {
                best = s;
                best_key = key;
            }
        }
        e.order.push_back(best);
        assigned.insert(best);
        unassigned.erase(std::find(unassigned.begin(), unassigned.end(), best));
    }

    for (std::size_t level = 0; level < e.order.size(); ++level)
        e.lists.push_back(all_lists[e.order[level]]);

    // Constraints become checkable at the level where their last symbol lands.
    e.checks_at.assign(e.order.size(), {});
    for (std::size_t ci = 0; ci < e.constraints.size(); ++ci) {
        std::size_t last = 0;
        for (int cs : e.constraints[ci].symbols) {
            auto it = std::find(e.order.begin(), e.order.end(), cs);
            last = std::max(last, static_cast<std::size_t>(it - e.order.begin()));
        }
        if (e.constraints[ci].symbols.empty()) last = 0;
        e.checks_at[last].push_back(static_cast<int>(ci));
    }

    e.min_suffix.assign(e.order.size() + 1, 0);
    e.max_suffix.assign(e.order.size() + 1, 0);
    for (int level = static_cast<int>(e.order.size()) - 1; level >= 0; --level) {
        long lo = e.lists[level].front().grade, hi = lo;
        for (const CandidateFn& c : e.lists[level]) {
            lo = std::min(lo, c.grade);
            hi = std::max(hi, c.grade);
        }
        e.min_suffix[level] = lo + e.min_suffix[level + 1];
        e.max_suffix[level] = hi + e.max_suffix[level + 1];
    }

    for (long grade = e.min_suffix.empty() ? 0 : e.min_suffix[0];
         grade <= (e.max_suffix.empty() ? 0 : e.max_suffix[0]); ++grade) {
        if (e.rec(0, grade)) break;
        if (e.stop) break;
    }
    if (e.result.status != SynthesisResult::Status::Found && e.stop)
        e.result.status = SynthesisResult::Status::TimedOut;
    return e.result;
}

namespace {

/// Affine shape of a term interpretation under fixed slopes: numeric slopes
/// on the rule variables plus an affine combination of the unknown constants.
struct AffShape {
    std::vector<Rational> var_slopes;
    std::vector<Rational> unknown_coeffs;
    Rational constant;
};

struct LinearBuilder {
    const Trs& trs;
    const SynthesisConfig& cfg;
    std::map<int, std::vector<Rational>> slopes;  // defined symbol -> per-arg slope
    std::map<int, int> unknown_of;                // symbol -> unknown index (constants)
    int num_unknowns = 0;

    AffShape shape(const Term& t, const std::vector<std::string>& vars) const {
        AffShape out;
        out.var_slopes.assign(vars.size(), Rational(0));
        out.unknown_coeffs.assign(num_unknowns, Rational(0));
        if (t.is_var()) {
            auto it = std::find(vars.begin(), vars.end(), t.var_name());
            out.var_slopes[it - vars.begin()] = Rational(1);
            return out;
        }
        const Symbol& sym = trs.signature.at(t.symbol());
        std::vector<Rational> arg_slopes;
        if (sym.kind == SymbolKind::Constructor) {
            arg_slopes.assign(sym.arity, Rational(1));
        } else {
            arg_slopes = slopes.at(t.symbol());
        }
        for (int i = 0; i < sym.arity; ++i) {
            AffShape sub = shape(t.args()[i], vars);
            for (std::size_t v = 0; v < vars.size(); ++v)
                out.var_slopes[v] += arg_slopes[i] * sub.var_slopes[v];
            for (int u = 0; u < num_unknowns; ++u)
                out.unknown_coeffs[u] += arg_slopes[i] * sub.unknown_coeffs[u];
            out.constant += arg_slopes[i] * sub.constant;
        }
        auto uit = unknown_of.find(t.symbol());
        if (uit != unknown_of.end()) out.unknown_coeffs[uit->second] += Rational(1);
        return out;
    }
};

}  // namespace

SynthesisResult synthesize_linear_template(const Trs& trs, const SynthesisConfig& cfg) {
    SynthesisResult result;
    std::vector<DependencyPair> dps =
        cfg.kind == CriterionKind::DPI ? dependency_pairs(trs) : std::vector<DependencyPair>{};
    std::vector<Rational> grid = coefficient_grid(cfg);

    LinearBuilder builder{trs, cfg};
    std::vector<int> slope_symbols;  // (symbol, arg) laid out in signature order
    for (int s : trs.defined_symbols())
        for (int arg = 0; arg < trs.signature.at(s).arity; ++arg) slope_symbols.push_back(s);
    for (int s = 0; s < trs.signature.size(); ++s) {
        const Symbol& sym = trs.signature.at(s);
        bool has_unknown = sym.kind == SymbolKind::Defined ||
                           (sym.kind == SymbolKind::Constructor &&
                            (sym.arity > 0 || cfg.nullary_relax.has_value()));
        if (has_unknown) builder.unknown_of[s] = builder.num_unknowns++;
    }

    // Enumerate slope tuples in graded lexicographic order.
    std::vector<int> defined = trs.defined_symbols();
    int total_slots = static_cast<int>(slope_symbols.size());
    std::vector<std::size_t> idx(total_slots, 0);
    long max_grade = 0;
    for (const Rational& g : grid) max_grade = std::max(max_grade, numerator_grade(g));
    long limit = max_grade * std::max(total_slots, 1);

    auto try_tuple = [&](const std::vector<std::size_t>& tuple) -> bool {
        ++result.candidates_tried;
        builder.slopes.clear();
        int slot = 0;
        for (int s : defined) {
            std::vector<Rational> arg_slopes;
            for (int arg = 0; arg < trs.signature.at(s).arity; ++arg)
                arg_slopes.push_back(grid[tuple[slot++]]);
            builder.slopes[s] = std::move(arg_slopes);
        }
        if (cfg.kind == CriterionKind::QI) {
            for (int s : defined)
                for (const Rational& a : builder.slopes[s])
                    if (a < Rational(1)) return false;  // subterm needs alpha >= 1
        }

        std::vector<LinIneq> system;
        auto bound_row = [&](int unknown, const Rational& coeff, const Rational& constant) {
            LinIneq q;
            q.coeffs.assign(builder.num_unknowns, Rational(0));
            q.coeffs[unknown] = coeff;
            q.constant = constant;
            system.push_back(std::move(q));
        };
        for (int s = 0; s < trs.signature.size(); ++s) {
            auto it = builder.unknown_of.find(s);
            if (it == builder.unknown_of.end()) continue;
            const Symbol& sym = trs.signature.at(s);
            if (sym.kind == SymbolKind::Defined) {
                bound_row(it->second, Rational(1), Rational(0));  // c_f >= 0
            } else if (sym.arity > 0) {
                bound_row(it->second, Rational(1), Rational(-1));  // k_c >= 1
            } else {
                bound_row(it->second, Rational(1), Rational(0));  // n_c >= 0
                bound_row(it->second, Rational(0) - Rational(1), *cfg.nullary_relax);
            }
        }
        auto add_geq = [&](const Term& l, const Term& r) -> bool {
            std::vector<std::string> vars = vars_of(l);
            AffShape ls = builder.shape(l, vars);
            AffShape rs = builder.shape(r, vars);
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (ls.var_slopes[v] < rs.var_slopes[v]) return false;
            LinIneq q;
            q.coeffs.assign(builder.num_unknowns, Rational(0));
            for (int u = 0; u < builder.num_unknowns; ++u)
                q.coeffs[u] = ls.unknown_coeffs[u] - rs.unknown_coeffs[u];
            q.constant = ls.constant - rs.constant;
            system.push_back(std::move(q));
            return true;
        };
        for (const Rule& rule : trs.rules)
            if (!add_geq(rule.lhs, rule.rhs)) return false;
        for (const DependencyPair& dp : dps)
            if (!add_geq(dp.lhs, dp.rhs)) return false;

        auto point = solve_linear_feasibility(builder.num_unknowns, system);
        if (!point) return false;

        Assignment a;
        for (int s = 0; s < trs.signature.size(); ++s) {
            const Symbol& sym = trs.signature.at(s);
            std::vector<Rational> coeffs;
            if (sym.kind == SymbolKind::Defined) {
                coeffs = builder.slopes[s];
                coeffs.push_back((*point)[builder.unknown_of.at(s)]);
            } else if (sym.arity > 0) {
                coeffs.assign(sym.arity, Rational(1));
                coeffs.push_back((*point)[builder.unknown_of.at(s)]);
            } else {
                Rational v = cfg.nullary_relax ? (*point)[builder.unknown_of.at(s)] : Rational(0);
                coeffs.push_back(v);
            }
            a.fns[sym.name] = MaxPolyFn::from_branches(sym.arity, {affine_branch(sym.arity, coeffs)});
        }
        VerifyOptions opts;
        opts.relax_nullary = cfg.nullary_relax;
        opts.plan = cfg.plan;
        VerificationReport report = cfg.kind == CriterionKind::DPI ? verify_dpi(trs, a, opts)
                                                                   : verify_qi(trs, a, opts);
        if (report.overall != Overall::Valid) return false;
        result.status = SynthesisResult::Status::Found;
        result.assignment = std::move(a);
        result.certificate = std::move(report);
        return true;
    };

    if (total_slots == 0) {
        if (try_tuple({})) return result;
        result.status = SynthesisResult::Status::Exhausted;
        return result;
    }

    auto deadline = std::chrono::steady_clock::now() + cfg.time_budget;
    for (long grade = 0; grade <= limit; ++grade) {
        // Walk all tuples of this total grade in lexicographic order.
        std::vector<std::size_t> tuple(total_slots, 0);
        struct Rec {
            const std::vector<Rational>& grid;
            std::vector<std::size_t>& tuple;
            long target;
            std::function<bool(const std::vector<std::size_t>&)>& sink;
            bool run(int slot) {
                if (slot == static_cast<int>(tuple.size()))
                    return target == 0 ? sink(tuple) : false;
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    long g = static_cast<long>(grid[i].numerator().get_si());
                    if (g > target) continue;
                    tuple[slot] = i;
                    target -= g;
                    bool found = run(slot + 1);
                    target += g;
                    if (found) return true;
                }
                return false;
            }
        };
        std::function<bool(const std::vector<std::size_t>&)> sink = try_tuple;
        Rec rec{grid, tuple, grade, sink};
        if (rec.run(0)) return result;
        if (std::chrono::steady_clock::now() > deadline) {
            result.status = SynthesisResult::Status::TimedOut;
            return result;
        }
    }
    result.status = SynthesisResult::Status::Exhausted;
    return result;
}

}  // namespace supbound
