// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/deppairs.hpp"

namespace supbound {

namespace {

bool is_proper_subterm_of(const Term& u, const Term& t) {
    for (const Position& pos : positions(t)) {
        if (pos.empty()) continue;
        if (subterm_at(t, pos) == u) return true;
    }
    return false;
}

}  // namespace

std::vector<DependencyPair> dependency_pairs(const Trs& trs) {
    std::vector<DependencyPair> out;
    for (int i = 0; i < static_cast<int>(trs.rules.size()); ++i) {
        const Rule& rule = trs.rules[i];
        for (const Position& pos : positions(rule.rhs)) {
            const Term& u = subterm_at(rule.rhs, pos);
            if (u.is_var()) continue;
            if (trs.signature.at(u.symbol()).kind != SymbolKind::Defined) continue;
            if (is_proper_subterm_of(u, rule.lhs)) continue;
            out.push_back(DependencyPair{rule.lhs, u, i, pos});
        }
    }
    return out;
}

std::string dp_to_string(const Trs& trs, const DependencyPair& dp) {
    return term_to_string(trs, dp.lhs, true) + " -> " + term_to_string(trs, dp.rhs, true);
}

}  // namespace supbound
