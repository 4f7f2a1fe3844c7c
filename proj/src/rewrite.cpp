// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/rewrite.hpp"

#include <map>
#include <set>

namespace supbound {

OrthogonalityReport check_orthogonality(const Trs& trs) {
    OrthogonalityReport report;
    report.left_linear = true;
    for (const Rule& r : trs.rules) {
        std::vector<std::string> seen;
        std::vector<std::string> all;
        struct Walk {
            std::vector<std::string>& all;
            void run(const Term& t) {
                if (t.is_var()) {
                    all.push_back(t.var_name());
                    return;
                }
                for (const Term& a : t.args()) run(a);
            }
        } walk{all};
        walk.run(r.lhs);
        std::set<std::string> uniq(all.begin(), all.end());
        if (uniq.size() != all.size()) report.left_linear = false;
    }

    int n = static_cast<int>(trs.rules.size());
    for (int i = 0; i < n; ++i) {
        Term li = rename_vars(trs.rules[i].lhs, "1:");
        for (int j = 0; j < n; ++j) {
            Term lj = rename_vars(trs.rules[j].lhs, "2:");
            for (const Position& pos : positions(lj)) {
                const Term& sub = subterm_at(lj, pos);
                if (sub.is_var()) continue;
                if (pos.empty()) {
                    if (i == j) continue;      // trivial self-overlap
                    if (i > j) continue;       // report root overlaps once per pair
                }
                if (unify(li, sub)) report.overlaps.push_back(Overlap{i, j, pos});
            }
        }
    }
    return report;
}

std::vector<Term> rewrite_step(const Trs& trs, const Term& t) {
    std::vector<Term> out;
    for (const Position& pos : positions(t)) {
        const Term& sub = subterm_at(t, pos);
        if (sub.is_var()) continue;
        for (const Rule& rule : trs.rules) {
            Substitution binding;
            if (match(rule.lhs, sub, binding))
                out.push_back(replace_at(t, pos, substitute(rule.rhs, binding)));
        }
    }
    return out;
}

namespace {

// Leftmost-innermost: rewrite inside arguments first, left to right, and only
// contract the root once every argument is in normal form.
std::optional<Term> innermost_step(const Trs& trs, const Term& t) {
    if (t.is_var()) return std::nullopt;
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (auto stepped = innermost_step(trs, t.args()[i])) {
            std::vector<Term> args = t.args();
            args[i] = std::move(*stepped);
            return Term::app(t.symbol(), std::move(args));
        }
    }
    for (const Rule& rule : trs.rules) {
        Substitution binding;
        if (match(rule.lhs, t, binding)) return substitute(rule.rhs, binding);
    }
    return std::nullopt;
}

}  // namespace

NormalizeResult normalize(const Trs& trs, const Term& t, long max_steps) {
    Term cur = t;
    long steps = 0;
    while (true) {
        auto next = innermost_step(trs, cur);
        if (!next) break;
        if (steps >= max_steps) return {NormalizeResult::Status::BudgetExceeded, cur, steps};
        cur = std::move(*next);
        ++steps;
    }
    auto status = contains_defined(trs, cur) ? NormalizeResult::Status::StuckNonValue
                                             : NormalizeResult::Status::NormalForm;
    return {status, cur, steps};
}

Trace normalize_traced(const Trs& trs, const Term& t, long max_steps) {
    Trace trace;
    trace.states.push_back(t);
    Term cur = t;
    long steps = 0;
    while (true) {
        auto next = innermost_step(trs, cur);
        if (!next) break;
        if (steps >= max_steps) {
            trace.status = NormalizeResult::Status::BudgetExceeded;
            return trace;
        }
        cur = std::move(*next);
        trace.states.push_back(cur);
        ++steps;
    }
    trace.status = contains_defined(trs, cur) ? NormalizeResult::Status::StuckNonValue
                                              : NormalizeResult::Status::NormalForm;
    return trace;
}

namespace {

struct DlSearch {
    const Trs& trs;
    long budget;
    long visited = 0;
    std::map<Term, long> memo;
    std::set<Term> on_stack;
    bool exceeded = false;

    long run(const Term& t) {
        if (exceeded) return 0;
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        if (on_stack.count(t)) {  // cycle: unbounded derivation
            exceeded = true;
            return 0;
        }
        if (++visited > budget) {
            exceeded = true;
            return 0;
        }
        on_stack.insert(t);
        long best = 0;
        for (const Term& s : rewrite_step(trs, t)) {
            long d = 1 + run(s);
            if (exceeded) break;
            if (d > best) best = d;
        }
        on_stack.erase(t);
        if (!exceeded) memo.emplace(t, best);
        return best;
    }
};

}  // namespace

DlResult derivational_length(const Trs& trs, const Term& t, long budget) {
    DlSearch search{trs, budget};
    long value = search.run(t);
    if (search.exceeded) return {true, 0};
    return {false, value};
}

}  // namespace supbound
