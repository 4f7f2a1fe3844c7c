// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/rcbridge.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace supbound {

std::optional<long> RcFunction::eval(long n) const {
    switch (kind) {
        case Kind::Linear:
            return c * n;
        case Kind::Poly: {
            long acc = 1;
            for (long i = 0; i < e; ++i) acc *= n;
            return c * acc;
        }
        case Kind::Table: {
            auto it = table.find(n);
            if (it == table.end()) return std::nullopt;
            return it->second;
        }
    }
    return std::nullopt;
}

std::string RcFunction::describe() const {
    switch (kind) {
        case Kind::Linear:
            return "rc(n) = " + std::to_string(c) + "*n";
        case Kind::Poly:
            return "rc(n) = " + std::to_string(c) + "*n^" + std::to_string(e);
        case Kind::Table: {
            std::string out = "rc measured:";
            for (const auto& [n, v] : table) out += " rc(" + std::to_string(n) + ")=" + std::to_string(v);
            return out;
        }
    }
    return "";
}

RcFunction RcReport::as_function() const {
    std::map<long, long> table;
    for (const RcPoint& p : points)
        if (p.rc) table[p.size] = *p.rc;
    return RcFunction::from_table(std::move(table));
}

namespace {

std::vector<Term> constructor_terms_memo(const Trs& trs, int size,
                                         std::map<int, std::vector<Term>>& memo) {
    auto it = memo.find(size);
    if (it != memo.end()) return it->second;
    std::vector<Term> out;
    if (size >= 1) {
        for (int s : trs.constructor_symbols()) {
            const Symbol& sym = trs.signature.at(s);
            if (sym.arity == 0) {
                if (size == 1) out.push_back(Term::app(s));
                continue;
            }
            if (size < 1 + sym.arity) continue;
            // Distribute size-1 over arity-many positive parts.
            std::vector<std::vector<Term>> parts(sym.arity);
            std::vector<Term> current;
            struct Rec {
                const Trs& trs;
                int sym_id;
                int arity;
                std::map<int, std::vector<Term>>& memo;
                std::vector<Term>& current;
                std::vector<Term>& out;
                void run(int pos, int remaining) {
                    int slots_left = arity - pos;
                    if (pos == arity) {
                        if (remaining == 0) out.push_back(Term::app(sym_id, current));
                        return;
                    }
                    for (int take = 1; take + (slots_left - 1) <= remaining; ++take) {
                        for (const Term& t : constructor_terms_memo(trs, take, memo)) {
                            current.push_back(t);
                            run(pos + 1, remaining - take);
                            current.pop_back();
                        }
                    }
                }
            } rec{trs, s, sym.arity, memo, current, out};
            rec.run(0, size - 1);
        }
    }
    memo[size] = out;
    return out;
}

}  // namespace

std::vector<Term> constructor_terms(const Trs& trs, int size) {
    std::map<int, std::vector<Term>> memo;
    return constructor_terms_memo(trs, size, memo);
}

std::vector<Term> basic_terms(const Trs& trs, int max_size) {
    std::vector<Term> out;
    std::map<int, std::vector<Term>> memo;
    for (int f : trs.defined_symbols())
        if (trs.signature.at(f).arity == 0 && max_size >= 1) out.push_back(Term::app(f));
    for (int size = 2; size <= max_size; ++size) {
        for (int f : trs.defined_symbols()) {
            const Symbol& sym = trs.signature.at(f);
            if (sym.arity == 0) {
                if (size == 1) out.push_back(Term::app(f));
                continue;
            }
            if (size < 1 + sym.arity) continue;
            std::vector<Term> current;
            struct Rec {
                const Trs& trs;
                int sym_id;
                int arity;
                std::map<int, std::vector<Term>>& memo;
                std::vector<Term>& current;
                std::vector<Term>& out;
                void run(int pos, int remaining) {
                    int slots_left = arity - pos;
                    if (pos == arity) {
                        if (remaining == 0) out.push_back(Term::app(sym_id, current));
                        return;
                    }
                    for (int take = 1; take + (slots_left - 1) <= remaining; ++take) {
                        for (const Term& t : constructor_terms_memo(trs, take, memo)) {
                            current.push_back(t);
                            run(pos + 1, remaining - take);
                            current.pop_back();
                        }
                    }
                }
            } rec{trs, f, sym.arity, memo, current, out};
            rec.run(0, size - 1);
        }
    }
    return out;
}

RcReport measure_rc(const Trs& trs, int max_size, long budget, unsigned long sample_seed) {
    RcReport report;
    report.max_size = max_size;
    std::map<int, std::vector<Term>> memo;
    long best_so_far = 0;
    bool any_measured = false;
    std::optional<Term> best_witness;
    std::mt19937_64 rng(sample_seed);

    for (int size = 1; size <= max_size; ++size) {
        std::vector<Term> terms;
        for (int f : trs.defined_symbols()) {
            const Symbol& sym = trs.signature.at(f);
            if (sym.arity == 0) {
                if (size == 1) terms.push_back(Term::app(f));
                continue;
            }
            if (size < 1 + sym.arity) continue;
            std::vector<Term> current;
            struct Rec {
                const Trs& trs;
                int sym_id;
                int arity;
                std::map<int, std::vector<Term>>& memo;
                std::vector<Term>& current;
                std::vector<Term>& out;
                void run(int pos, int remaining) {
                    int slots_left = arity - pos;
                    if (pos == arity) {
                        if (remaining == 0) out.push_back(Term::app(sym_id, current));
                        return;
                    }
                    for (int take = 1; take + (slots_left - 1) <= remaining; ++take) {
                        for (const Term& t : constructor_terms_memo(trs, take, memo)) {
                            current.push_back(t);
                            run(pos + 1, remaining - take);
                            current.pop_back();
                        }
                    }
                }
            } rec{trs, f, sym.arity, memo, current, terms};
            rec.run(0, size - 1);
        }
        if (size > kExhaustiveRcSize && terms.size() > 64) {
            report.approximate = true;
            std::shuffle(terms.begin(), terms.end(), rng);
            terms.resize(64);
        }
        for (const Term& t : terms) {
            DlResult dl = derivational_length(trs, t, budget);
            if (dl.budget_exceeded) {
                ++report.flagged_nonterminating;
                continue;
            }
            if (!any_measured || dl.value > best_so_far) {
                best_so_far = std::max(best_so_far, dl.value);
                best_witness = t;
            }
            any_measured = true;
        }
        // The max over an empty set is 0; a dropped measurement leaves the
        // true maximum unknown from this size on.
        bool defined = report.flagged_nonterminating == 0;
        report.points.push_back(
            RcPoint{size, defined ? std::optional<long>(best_so_far) : std::nullopt, best_witness});
    }
    return report;
}

RcInterp::RcInterp(const Trs& trs, RcFunction rc)
    : trs_(trs), rc_(std::move(rc)), trs_size_(Rational(trs.trs_size())) {}

Rational RcInterp::term_value(const Term& ground) const {
    if (ground.is_var()) throw std::invalid_argument("term_value needs a ground term");
    const Symbol& sym = trs_.signature.at(ground.symbol());
    std::vector<Rational> args;
    args.reserve(ground.args().size());
    for (const Term& a : ground.args()) args.push_back(term_value(a));
    if (sym.kind == SymbolKind::Defined) return apply(ground.symbol(), args);
    if (sym.arity == 0) return Rational(0);
    Rational total(1);
    for (const Rational& a : args) total += a;
    return total;
}

Rational RcInterp::apply(int symbol, const std::vector<Rational>& args) const {
    if (trs_.signature.at(symbol).kind != SymbolKind::Defined)
        throw std::invalid_argument("runtime-complexity bound applies to defined symbols");
    Rational base(1);
    for (const Rational& a : args) base += a;
    if (!base.is_integer())
        throw std::invalid_argument("runtime-complexity bound needs integral sizes");
    long n = static_cast<long>(base.numerator().get_si());
    std::optional<long> rc = rc_.eval(n);
    if (!rc)
        throw std::invalid_argument("rc undefined at required size " + std::to_string(n));
    return base * Rational::pow(trs_size_, static_cast<unsigned long>(*rc));
}

std::string RcInterp::pretty() const {
    std::string out;
    long p = trs_.trs_size();
    for (const Symbol& sym : trs_.signature.symbols()) {
        out += sym.name + " = ";
        if (sym.kind == SymbolKind::Constructor) {
            if (sym.arity == 0) {
                out += "0";
            } else {
                for (int i = 0; i < sym.arity; ++i) out += "X" + std::to_string(i + 1) + " + ";
                out += "1";
            }
        } else {
            std::string sum = "(";
            for (int i = 0; i < sym.arity; ++i) sum += "X" + std::to_string(i + 1) + " + ";
            sum += "1)";
            out += sum + " * " + std::to_string(p) + "^rc" + sum;
        }
        out += "\n";
    }
    out += "# " + rc_.describe() + "\n";
    return out;
}

RcInterp construct_si_from_rc(const Trs& trs, RcFunction rc) {
    return RcInterp(trs, std::move(rc));
}

SizeLemmaReport check_size_lemma(const Trs& trs, const std::vector<Trace>& traces) {
    SizeLemmaReport report;
    Rational p(trs.trs_size());
    report.tightest = Rational(0);
    for (const Trace& trace : traces) {
        if (trace.states.empty()) continue;
        ++report.traces;
        Rational start_size(trace.states.front().size());
        Rational bound = start_size;
        for (std::size_t n = 0; n < trace.states.size(); ++n) {
            if (n > 0) bound *= p;  // start_size * p^n
            Rational s(trace.states[n].size());
            ++report.steps_checked;
            if (s > bound) {
                report.violations.emplace_back(trace.states.front(), static_cast<long>(n));
                continue;
            }
            Rational ratio = s / bound;
            report.tightest = Rational::max(report.tightest, ratio);
        }
    }
    return report;
}

}  // namespace supbound
