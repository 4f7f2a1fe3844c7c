// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/fnparse.hpp"

#include <cctype>
#include <stdexcept>

namespace supbound {

namespace {

struct FnLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("function syntax error at offset " + std::to_string(pos) +
                                    ": " + msg);
    }
    Rational number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected number");
        std::string num = text.substr(start, pos - start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (dstart == pos) fail("expected denominator");
            num += "/" + text.substr(dstart, pos - dstart);
        }
        return Rational::from_string(num);
    }
    unsigned small_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected number");
        return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
    }
};

struct FnParser {
    FnLexer lex;
    int arity;

    int variable_index() {
        lex.skip_ws();
        if (lex.peek() != 'X') lex.fail("expected variable");
        ++lex.pos;
        unsigned idx = lex.small_number();
        if (idx < 1 || static_cast<int>(idx) > arity)
            lex.fail("variable X" + std::to_string(idx) + " out of range for arity " +
                     std::to_string(arity));
        return static_cast<int>(idx) - 1;
    }

    Poly monomial() {
        Rational coeff(1);
        Exponents exps(arity, 0);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            coeff = lex.number();
            saw_coeff = true;
            if (!lex.eat('*')) {
                Poly p{arity, {}};
                if (!coeff.is_zero()) p.monos.emplace(std::move(exps), coeff);
                return p;
            }
        }
        bool saw_var = false;
        while (true) {
            if (lex.peek() == 'X') {
                int idx = variable_index();
                unsigned e = 1;
                if (lex.eat('^')) e = lex.small_number();
                exps[idx] += e;
                saw_var = true;
            } else {
                break;
            }
            if (!lex.eat('*')) break;
        }
        if (!saw_var) {
            if (!saw_coeff) lex.fail("expected monomial");
            lex.fail("expected variable after '*'");
        }
        Poly p{arity, {}};
        if (!coeff.is_zero()) p.monos.emplace(std::move(exps), coeff);
        return p;
    }

    Poly poly() {
        Poly p = monomial();
        while (lex.eat('+')) p = p + monomial();
        return p;
    }

    MaxPolyFn fn() {
        if (lex.eat_word("max")) {
            if (!lex.eat('(')) lex.fail("expected '(' after max");
            std::vector<Poly> branches;
            branches.push_back(poly());
            while (lex.eat(',')) branches.push_back(poly());
            if (!lex.eat(')')) lex.fail("expected ')'");
            return MaxPolyFn::from_branches(arity, std::move(branches));
        }
        return MaxPolyFn::from_branches(arity, {poly()});
    }
};

}  // namespace

MaxPolyFn parse_fn(const std::string& text, int arity) {
    FnParser parser{FnLexer{text}, arity};
    MaxPolyFn out = parser.fn();
    parser.lex.skip_ws();
    if (parser.lex.pos != text.size()) parser.lex.fail("trailing input");
    return out;
}

}  // namespace supbound
