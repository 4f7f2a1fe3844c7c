// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/rational.hpp"

namespace supbound {

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // Accept "p", "p/q" and decimal literals like "1.5".
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-") throw std::invalid_argument("bad rational literal: " + text);
        mpz_class num(digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(const Rational& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), e);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace supbound
