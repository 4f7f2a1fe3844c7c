// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/parser.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace supbound {

namespace {

struct Token {
    enum Kind { Ident, LParen, RParen, Comma, Arrow, End } kind;
    std::string text;
    int line;
    int col;
};

// Digit-led identifiers (numerals like 0) are allowed; the grammar has no
// numeric literals to collide with.
bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '(') { out.push_back({Token::LParen, "(", line, col}); advance(1); continue; }
        if (c == ')') { out.push_back({Token::RParen, ")", line, col}); advance(1); continue; }
        if (c == ',') { out.push_back({Token::Comma, ",", line, col}); advance(1); continue; }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Arrow, "->", line, col});
            advance(2);
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Token::Ident, text.substr(i, j - i), line, col});
            advance(j - i);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

struct RawTerm {
    std::string name;
    int line;
    int col;
    std::vector<RawTerm> args;
};

struct RawParser {
    const std::vector<Token>& toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    RawTerm parse_term() {
        const Token& t = peek();
        if (t.kind != Token::Ident)
            throw ParseError("expected identifier, got '" + t.text + "'", t.line, t.col);
        RawTerm out{take().text, t.line, t.col, {}};
        if (peek().kind == Token::LParen) {
            take();
            out.args.push_back(parse_term());
            while (peek().kind == Token::Comma) {
                take();
                out.args.push_back(parse_term());
            }
            const Token& close = peek();
            if (close.kind != Token::RParen)
                throw ParseError("expected ')' or ','", close.line, close.col);
            take();
        }
        return out;
    }
};

void collect_arities(const RawTerm& t, std::map<std::string, std::pair<int, Token>>& arities) {
    int n = static_cast<int>(t.args.size());
    Token where{Token::Ident, t.name, t.line, t.col};
    auto it = arities.find(t.name);
    if (it == arities.end()) {
        arities.emplace(t.name, std::make_pair(n, where));
    } else if (it->second.first != n) {
        throw ParseError("arity conflict for '" + t.name + "': used with " +
                             std::to_string(it->second.first) + " and " + std::to_string(n) +
                             " arguments",
                         t.line, t.col);
    }
    for (const RawTerm& a : t.args) collect_arities(a, arities);
}

void collect_applied_or_nested(const RawTerm& t, bool top_level_lhs_arg,
                               std::set<std::string>& not_variable) {
    if (!t.args.empty() || top_level_lhs_arg) not_variable.insert(t.name);
    for (const RawTerm& a : t.args) collect_applied_or_nested(a, false, not_variable);
}

Term to_term(const RawTerm& raw, const Trs& trs, const std::set<std::string>& variables) {
    if (variables.count(raw.name)) {
        if (!raw.args.empty())
            throw ParseError("variable '" + raw.name + "' applied to arguments", raw.line, raw.col);
        return Term::var(raw.name);
    }
    auto id = trs.signature.find(raw.name);
    if (!id) throw ParseError("unknown symbol '" + raw.name + "'", raw.line, raw.col);
    std::vector<Term> args;
    args.reserve(raw.args.size());
    for (const RawTerm& a : raw.args) args.push_back(to_term(a, trs, variables));
    return Term::app(*id, std::move(args));
}

void register_symbols(const RawTerm& raw, Trs& trs, const std::set<std::string>& variables,
                      const std::set<std::string>& lhs_roots) {
    if (variables.count(raw.name)) return;
    SymbolKind kind = lhs_roots.count(raw.name) ? SymbolKind::Defined : SymbolKind::Constructor;
    trs.signature.add(raw.name, static_cast<int>(raw.args.size()), kind);
    for (const RawTerm& a : raw.args) register_symbols(a, trs, variables, lhs_roots);
}

}  // namespace

Trs parse_trs(const std::string& text) {
    // Optional header: a first ident "VARS" followed by identifiers up to the
    // end of its line pins the variable set.
    std::vector<Token> toks = tokenize(text);
    std::set<std::string> header_vars;
    bool has_header = false;
    std::size_t start = 0;
    if (!toks.empty() && toks[0].kind == Token::Ident && toks[0].text == "VARS") {
        has_header = true;
        std::size_t i = 1;
        int header_line = toks[0].line;
        while (toks[i].kind == Token::Ident && toks[i].line == header_line) {
            header_vars.insert(toks[i].text);
            ++i;
        }
        start = i;
    }

    RawParser parser{toks, start};
    std::vector<std::pair<RawTerm, RawTerm>> raw_rules;
    while (parser.peek().kind != Token::End) {
        RawTerm lhs = parser.parse_term();
        const Token& arrow = parser.peek();
        if (arrow.kind != Token::Arrow) throw ParseError("expected '->'", arrow.line, arrow.col);
        parser.take();
        RawTerm rhs = parser.parse_term();
        raw_rules.emplace_back(std::move(lhs), std::move(rhs));
    }

    std::map<std::string, std::pair<int, Token>> arities;
    for (auto& [l, r] : raw_rules) {
        collect_arities(l, arities);
        collect_arities(r, arities);
    }

    std::set<std::string> lhs_roots;
    for (auto& [l, r] : raw_rules) lhs_roots.insert(l.name);

    std::set<std::string> variables;
    if (has_header) {
        variables = header_vars;
        for (const std::string& v : variables) {
            auto it = arities.find(v);
            if (it != arities.end() && it->second.first > 0)
                throw ParseError("declared variable '" + v + "' used with arguments",
                                 it->second.second.line, it->second.second.col);
            if (lhs_roots.count(v))
                throw ParseError("declared variable '" + v + "' is the root of a left-hand side", 1,
                                 1);
        }
    } else {
        std::set<std::string> not_variable;
        for (auto& [l, r] : raw_rules) {
            not_variable.insert(l.name);
            for (const RawTerm& arg : l.args) collect_applied_or_nested(arg, true, not_variable);
            collect_applied_or_nested(r, false, not_variable);
        }
        for (auto& [name, info] : arities)
            if (info.first == 0 && !not_variable.count(name)) variables.insert(name);
    }

    Trs trs;
    for (auto& [l, r] : raw_rules) {
        register_symbols(l, trs, variables, lhs_roots);
        register_symbols(r, trs, variables, lhs_roots);
    }

    for (auto& [l, r] : raw_rules) {
        if (variables.count(l.name))
            throw ParseError("left-hand side must be a defined symbol application", l.line, l.col);
        Term lhs = to_term(l, trs, variables);
        Term rhs = to_term(r, trs, variables);

        for (const Term& arg : lhs.args()) {
            if (contains_defined(trs, arg))
                throw ParseError("non-pattern argument in left-hand side '" +
                                     term_to_string(trs, lhs) + "'",
                                 l.line, l.col);
        }
        std::vector<std::string> lv = vars_of(lhs);
        for (const std::string& v : vars_of(rhs)) {
            if (std::find(lv.begin(), lv.end(), v) == lv.end())
                throw ParseError("right-hand side variable '" + v + "' does not occur in left-hand side",
                                 r.line, r.col);
        }
        trs.rules.push_back(Rule{std::move(lhs), std::move(rhs)});
    }
    return trs;
}

Term parse_term(const Trs& trs, const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    RawParser parser{toks, 0};
    RawTerm raw = parser.parse_term();
    const Token& end = parser.peek();
    if (end.kind != Token::End) throw ParseError("trailing input after term", end.line, end.col);

    struct Conv {
        const Trs& trs;
        Term run(const RawTerm& r) {
            auto id = trs.signature.find(r.name);
            if (!id) {
                if (!r.args.empty())
                    throw ParseError("unknown symbol '" + r.name + "'", r.line, r.col);
                return Term::var(r.name);
            }
            if (trs.signature.at(*id).arity != static_cast<int>(r.args.size()))
                throw ParseError("arity mismatch for '" + r.name + "'", r.line, r.col);
            std::vector<Term> args;
            for (const RawTerm& a : r.args) args.push_back(run(a));
            return Term::app(*id, std::move(args));
        }
    } conv{trs};
    return conv.run(raw);
}

}  // namespace supbound
