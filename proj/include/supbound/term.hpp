// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supbound {

enum class SymbolKind { Constructor, Defined };

struct Symbol {
    std::string name;
    int arity = 0;
    SymbolKind kind = SymbolKind::Constructor;
};

/// Symbols in first-occurrence order; names are unique and the
/// constructor/defined split is disjoint by construction.
class Signature {
public:
    int add(const std::string& name, int arity, SymbolKind kind);
    std::optional<int> find(const std::string& name) const;
    const Symbol& at(int id) const { return symbols_.at(id); }
    Symbol& at(int id) { return symbols_.at(id); }
    int size() const { return static_cast<int>(symbols_.size()); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::map<std::string, int> index_;
};

/// First-order term: a variable or an application of a signature symbol to
/// exactly arity-many arguments. Immutable value; safe to share.
class Term {
public:
    static Term var(std::string name);
    static Term app(int symbol, std::vector<Term> args = {});

    bool is_var() const { return sym_ < 0; }
    const std::string& var_name() const { return var_; }
    int symbol() const { return sym_; }
    const std::vector<Term>& args() const { return args_; }

    /// Number of symbol and variable occurrences (always >= 1).
    int size() const;

    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const;

private:
    int sym_ = -1;
    std::string var_;
    std::vector<Term> args_;
};

/// Path from the root; [] is the root, [i] the i-th argument (0-based).
using Position = std::vector<int>;

struct Rule {
    Term lhs;
    Term rhs;
};

struct Trs {
    Signature signature;
    std::vector<Rule> rules;

    /// Sum over rules of |lhs| + |rhs|.
    long trs_size() const;
    std::vector<int> defined_symbols() const;
    std::vector<int> constructor_symbols() const;
};

int term_size(const Term& t);

/// Variables of t in order of first occurrence (pre-order).
std::vector<std::string> vars_of(const Term& t);

bool contains_defined(const Trs& trs, const Term& t);
bool is_constructor_term(const Trs& trs, const Term& t);

/// All positions of t in pre-order (position-lexicographic) order.
std::vector<Position> positions(const Term& t);
const Term& subterm_at(const Term& t, const Position& pos);
Term replace_at(const Term& t, const Position& pos, const Term& replacement);

using Substitution = std::map<std::string, Term>;

/// Syntactic matching of pattern against t, extending binding. Repeated
/// pattern variables must bind to equal terms.
bool match(const Term& pattern, const Term& t, Substitution& binding);
Term substitute(const Term& t, const Substitution& binding);

/// Robinson unification with occurs check.
std::optional<Substitution> unify(const Term& a, const Term& b);

/// Rename every variable with the given prefix (for unifying rules apart).
Term rename_vars(const Term& t, const std::string& prefix);

std::string term_to_string(const Trs& trs, const Term& t, bool mark_root = false);
std::string position_to_string(const Position& pos);

}  // namespace supbound
