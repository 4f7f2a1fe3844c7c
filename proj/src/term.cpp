// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace supbound {

int Signature::add(const std::string& name, int arity, SymbolKind kind) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    symbols_.push_back(Symbol{name, arity, kind});
    int id = static_cast<int>(symbols_.size()) - 1;
    index_[name] = id;
    return id;
}

std::optional<int> Signature::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Term Term::var(std::string name) {
    Term t;
    t.sym_ = -1;
    t.var_ = std::move(name);
    return t;
}

Term Term::app(int symbol, std::vector<Term> args) {
    Term t;
    t.sym_ = symbol;
    t.args_ = std::move(args);
    return t;
}

int Term::size() const {
    int n = 1;
    for (const Term& a : args_) n += a.size();
    return n;
}

bool Term::operator==(const Term& o) const {
    if (sym_ != o.sym_) return false;
    if (sym_ < 0) return var_ == o.var_;
    return args_ == o.args_;
}

bool Term::operator<(const Term& o) const {
    if (sym_ != o.sym_) return sym_ < o.sym_;
    if (sym_ < 0) return var_ < o.var_;
    return args_ < o.args_;
}

long Trs::trs_size() const {
    long total = 0;
    for (const Rule& r : rules) total += r.lhs.size() + r.rhs.size();
    return total;
}

std::vector<int> Trs::defined_symbols() const {
    std::vector<int> out;
    for (int i = 0; i < signature.size(); ++i)
        if (signature.at(i).kind == SymbolKind::Defined) out.push_back(i);
    return out;
}

std::vector<int> Trs::constructor_symbols() const {
    std::vector<int> out;
    for (int i = 0; i < signature.size(); ++i)
        if (signature.at(i).kind == SymbolKind::Constructor) out.push_back(i);
    return out;
}

int term_size(const Term& t) { return t.size(); }

static void collect_vars(const Term& t, std::vector<std::string>& acc) {
    if (t.is_var()) {
        if (std::find(acc.begin(), acc.end(), t.var_name()) == acc.end()) acc.push_back(t.var_name());
        return;
    }
    for (const Term& a : t.args()) collect_vars(a, acc);
}

std::vector<std::string> vars_of(const Term& t) {
    std::vector<std::string> acc;
    collect_vars(t, acc);
    return acc;
}

bool contains_defined(const Trs& trs, const Term& t) {
    if (t.is_var()) return false;
    if (trs.signature.at(t.symbol()).kind == SymbolKind::Defined) return true;
    for (const Term& a : t.args())
        if (contains_defined(trs, a)) return true;
    return false;
}

bool is_constructor_term(const Trs& trs, const Term& t) {
    if (t.is_var()) return false;
    if (trs.signature.at(t.symbol()).kind != SymbolKind::Constructor) return false;
    for (const Term& a : t.args())
        if (!is_constructor_term(trs, a)) return false;
    return true;
}

static void collect_positions(const Term& t, Position& cur, std::vector<Position>& acc) {
    acc.push_back(cur);
    for (int i = 0; i < static_cast<int>(t.args().size()); ++i) {
        cur.push_back(i);
        collect_positions(t.args()[i], cur, acc);
        cur.pop_back();
    }
}

std::vector<Position> positions(const Term& t) {
    std::vector<Position> acc;
    Position cur;
    collect_positions(t, cur, acc);
    return acc;
}

const Term& subterm_at(const Term& t, const Position& pos) {
    const Term* cur = &t;
    for (int i : pos) cur = &cur->args().at(i);
    return *cur;
}

Term replace_at(const Term& t, const Position& pos, const Term& replacement) {
    if (pos.empty()) return replacement;
    std::vector<Term> args = t.args();
    Position rest(pos.begin() + 1, pos.end());
    args.at(pos.front()) = replace_at(args.at(pos.front()), rest, replacement);
    return Term::app(t.symbol(), std::move(args));
}

bool match(const Term& pattern, const Term& t, Substitution& binding) {
    if (pattern.is_var()) {
        auto it = binding.find(pattern.var_name());
        if (it != binding.end()) return it->second == t;
        binding.emplace(pattern.var_name(), t);
        return true;
    }
    if (t.is_var() || t.symbol() != pattern.symbol()) return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match(pattern.args()[i], t.args()[i], binding)) return false;
    return true;
}

Term substitute(const Term& t, const Substitution& binding) {
    if (t.is_var()) {
        auto it = binding.find(t.var_name());
        return it == binding.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(substitute(a, binding));
    return Term::app(t.symbol(), std::move(args));
}

static bool occurs(const std::string& v, const Term& t) {
    if (t.is_var()) return t.var_name() == v;
    for (const Term& a : t.args())
        if (occurs(v, a)) return true;
    return false;
}

static bool unify_into(Term a, Term b, Substitution& s) {
    a = substitute(a, s);
    b = substitute(b, s);
    if (a.is_var()) {
        if (b.is_var() && b.var_name() == a.var_name()) return true;
        if (occurs(a.var_name(), b)) return false;
        Substitution single{{a.var_name(), b}};
        for (auto& [k, v] : s) v = substitute(v, single);
        s[a.var_name()] = b;
        return true;
    }
    if (b.is_var()) return unify_into(b, a, s);
    if (a.symbol() != b.symbol()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!unify_into(a.args()[i], b.args()[i], s)) return false;
    return true;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
    Substitution s;
    if (!unify_into(a, b, s)) return std::nullopt;
    return s;
}

Term rename_vars(const Term& t, const std::string& prefix) {
    if (t.is_var()) return Term::var(prefix + t.var_name());
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(rename_vars(a, prefix));
    return Term::app(t.symbol(), std::move(args));
}

std::string term_to_string(const Trs& trs, const Term& t, bool mark_root) {
    if (t.is_var()) return t.var_name();
    std::string out = trs.signature.at(t.symbol()).name;
    if (mark_root) out += "#";
    if (t.args().empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        out += term_to_string(trs, t.args()[i]);
    }
    out += ")";
    return out;
}

std::string position_to_string(const Position& pos) {
    if (pos.empty()) return "root";
    std::string out;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (i) out += ".";
        out += std::to_string(pos[i] + 1);
    }
    return out;
}

}  // namespace supbound
