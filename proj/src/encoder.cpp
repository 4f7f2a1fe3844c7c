// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/encoder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supbound {

namespace {

CoefExpr ce_const(const Rational& r) {
    CoefExpr e;
    if (!r.is_zero()) e.terms.emplace(CoefMono{}, r);
    return e;
}

CoefExpr ce_unknown(const std::string& name) {
    CoefExpr e;
    e.terms.emplace(CoefMono{{name, 1}}, Rational(1));
    return e;
}

CoefExpr ce_add(const CoefExpr& a, const CoefExpr& b) {
    CoefExpr out = a;
    for (const auto& [mono, coeff] : b.terms) {
        auto [it, inserted] = out.terms.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.terms.erase(it);
        }
    }
    return out;
}

CoefExpr ce_mul(const CoefExpr& a, const CoefExpr& b) {
    CoefExpr out;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            CoefMono m = ma;
            for (const auto& [name, pow] : mb) m[name] += pow;
            Rational c = ca * cb;
            auto [it, inserted] = out.terms.emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    }
    return out;
}

TemplPoly tp_zero() { return {}; }

TemplPoly tp_add(const TemplPoly& a, const TemplPoly& b) {
    TemplPoly out = a;
    for (const auto& [exps, ce] : b) {
        auto [it, inserted] = out.emplace(exps, ce);
        if (!inserted) it->second = ce_add(it->second, ce);
        if (it->second.is_zero()) out.erase(exps);
    }
    return out;
}

TemplPoly tp_mul(const TemplPoly& a, const TemplPoly& b, int arity) {
    TemplPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(arity, 0);
            for (int i = 0; i < arity; ++i) e[i] = ea[i] + eb[i];
            CoefExpr c = ce_mul(ca, cb);
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(std::move(e), std::move(c));
            else
                it->second = ce_add(it->second, c);
        }
    }
    return out;
}

TemplPoly tp_var(int arity, int index) {
    Exponents e(arity, 0);
    e[index] = 1;
    TemplPoly out;
    out.emplace(std::move(e), ce_const(Rational(1)));
    return out;
}

struct Encoder {
    const Trs& trs;
    CriterionKind kind;
    int k, d;
    FormulaDoc doc;

    // All exponent supports with total degree <= d over `arity` variables.
    std::vector<Exponents> supports(int arity) const {
        std::vector<Exponents> out;
        Exponents cur(arity, 0);
        struct Rec {
            int arity, d;
            std::vector<Exponents>& out;
            Exponents& cur;
            void run(int pos, int remaining) {
                if (pos == arity) {
                    out.push_back(cur);
                    return;
                }
                for (int e = 0; e <= remaining; ++e) {
                    cur[pos] = e;
                    run(pos + 1, remaining - e);
                }
                cur[pos] = 0;
            }
        } rec{arity, d, out, cur};
        rec.run(0, d);
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::string coeff_name(const std::string& symbol, int branch, const Exponents& exps) {
        std::string out = "a_" + symbol + "_" + std::to_string(branch);
        for (unsigned e : exps) out += "_" + std::to_string(e);
        return out;
    }

    void build_templates() {
        for (const Symbol& sym : trs.signature.symbols()) {
            TemplFn tf;
            tf.arity = sym.arity;
            if (sym.kind == SymbolKind::Constructor && sym.arity == 0) {
                tf.branches.push_back(tp_zero());  // nullary constructors are pinned to 0
            } else {
                for (int branch = 1; branch <= k; ++branch) {
                    TemplPoly poly;
                    for (const Exponents& exps : supports(sym.arity)) {
                        std::string name = coeff_name(sym.name, branch, exps);
                        doc.coeff_names.push_back(name);
                        poly.emplace(exps, ce_unknown(name));
                    }
                    tf.branches.push_back(std::move(poly));
                }
            }
            doc.templates.emplace(sym.name, std::move(tf));
        }
    }

    // Widen a template polynomial over `from` variables into `to` variables,
    // optionally shifting variable indices (monotonicity's Y block).
    static TemplPoly widen(const TemplPoly& p, int from, int to, int shift) {
        TemplPoly out;
        for (const auto& [exps, ce] : p) {
            Exponents e(to, 0);
            for (int i = 0; i < from; ++i) e[i + shift] = exps[i];
            out.emplace(std::move(e), ce);
        }
        return out;
    }

    TemplFn compose_term(const Term& t, const std::vector<std::string>& vars) const {
        int arity = static_cast<int>(vars.size());
        if (t.is_var()) {
            auto it = std::find(vars.begin(), vars.end(), t.var_name());
            TemplFn tf;
            tf.arity = arity;
            tf.branches.push_back(tp_var(arity, static_cast<int>(it - vars.begin())));
            return tf;
        }
        const TemplFn& f = doc.templates.at(trs.signature.at(t.symbol()).name);
        std::vector<TemplFn> args;
        args.reserve(t.args().size());
        for (const Term& sub : t.args()) args.push_back(compose_term(sub, vars));

        TemplFn out;
        out.arity = arity;
        for (const TemplPoly& branch : f.branches) {
            // Substitute argument templates into one polynomial branch; max
            // distributes over + and x exactly as in the concrete algebra.
            std::vector<TemplPoly> acc{tp_zero()};
            bool first = true;
            for (const auto& [exps, ce] : branch) {
                // term = ce * prod args[i]^exps[i], each arg a max of branches
                std::vector<TemplPoly> term{TemplPoly{{Exponents(arity, 0), ce}}};
                for (int i = 0; i < f.arity; ++i) {
                    for (unsigned e = 0; e < exps[i]; ++e) {
                        std::vector<TemplPoly> next;
                        for (const TemplPoly& acc_p : term)
                            for (const TemplPoly& arg_p : args[i].branches)
                                next.push_back(tp_mul(acc_p, arg_p, arity));
                        term = std::move(next);
                    }
                }
                if (first) {
                    acc = std::move(term);
                    first = false;
                } else {
                    std::vector<TemplPoly> next;
                    for (const TemplPoly& a : acc)
                        for (const TemplPoly& b : term) next.push_back(tp_add(a, b));
                    acc = std::move(next);
                }
            }
            for (TemplPoly& p : acc) out.branches.push_back(std::move(p));
        }
        return out;
    }

    void add_subterm_group(const Symbol& sym, bool strict) {
        if (sym.arity == 0) return;
        const TemplFn& f = doc.templates.at(sym.name);
        EncGroup g;
        g.label = std::string(strict ? "S!" : "S") + "[" + sym.name + "]";
        g.var_count = sym.arity;
        for (int j = 0; j < sym.arity; ++j) {
            std::vector<EncAtom> clause;
            for (const TemplPoly& branch : f.branches) {
                EncAtom atom;
                atom.lhs = branch;
                atom.rhs = tp_var(sym.arity, j);
                atom.plus_delta = strict;
                clause.push_back(std::move(atom));
            }
            g.cnf.push_back(std::move(clause));
        }
        doc.groups.push_back(std::move(g));
    }

    void add_monotone_group(const Symbol& sym, bool strict) {
        if (sym.arity == 0) return;
        const TemplFn& f = doc.templates.at(sym.name);
        EncGroup g;
        g.label = std::string(strict ? "SM" : "M") + "[" + sym.name + "]";
        g.premise = strict ? EncGroup::Premise::StrictMono : EncGroup::Premise::WeakMono;
        g.premise_arity = sym.arity;
        g.var_count = 2 * sym.arity;
        for (const TemplPoly& rhs_branch : f.branches) {
            std::vector<EncAtom> clause;
            for (const TemplPoly& lhs_branch : f.branches) {
                EncAtom atom;
                atom.lhs = widen(lhs_branch, sym.arity, 2 * sym.arity, 0);
                atom.rhs = widen(rhs_branch, sym.arity, 2 * sym.arity, sym.arity);
                atom.strict = strict;
                clause.push_back(std::move(atom));
            }
            g.cnf.push_back(std::move(clause));
        }
        doc.groups.push_back(std::move(g));
    }

    void add_geq_group(const std::string& label, const Term& l, const Term& r, bool with_delta) {
        std::vector<std::string> vars = vars_of(l);
        int arity = static_cast<int>(vars.size());
        TemplFn lf = compose_term(l, vars);
        TemplFn rf = compose_term(r, vars);
        EncGroup g;
        g.label = label;
        g.var_count = arity;
        for (const TemplPoly& rj : rf.branches) {
            std::vector<EncAtom> clause;
            for (const TemplPoly& pi : lf.branches) {
                EncAtom atom;
                atom.lhs = pi;
                atom.rhs = rj;
                atom.plus_delta = with_delta;
                clause.push_back(std::move(atom));
            }
            g.cnf.push_back(std::move(clause));
        }
        doc.groups.push_back(std::move(g));
    }
};

}  // namespace

FormulaDoc encode(const Trs& trs, CriterionKind kind, int k, int d, PiMode pi_mode) {
    Encoder enc{trs, kind, k, d};
    enc.doc.kind = kind;
    enc.doc.pi_mode = pi_mode;
    enc.doc.k = k;
    enc.doc.d = d;
    enc.doc.has_delta = kind == CriterionKind::PI;
    enc.build_templates();

    for (const Symbol& sym : trs.signature.symbols()) {
        if (kind == CriterionKind::QI) enc.add_subterm_group(sym, false);
        if (kind == CriterionKind::PI) {
            enc.add_monotone_group(sym, true);
            if (pi_mode == PiMode::SubtermStrict2a) enc.add_subterm_group(sym, true);
        } else {
            enc.add_monotone_group(sym, false);
        }
    }
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        std::string label = "R[" + term_to_string(trs, rule.lhs) + " -> " +
                            term_to_string(trs, rule.rhs) + "]";
        enc.add_geq_group(label, rule.lhs, rule.rhs, kind == CriterionKind::PI);
    }
    if (kind == CriterionKind::DPI) {
        for (const DependencyPair& dp : dependency_pairs(trs)) {
            std::string label = "DP[" + dp_to_string(trs, dp) + "]";
            enc.add_geq_group(label, dp.lhs, dp.rhs, false);
        }
    }
    int max_vars = 0;
    for (const EncGroup& g : enc.doc.groups) max_vars = std::max(max_vars, g.var_count);
    enc.doc.universal_count = max_vars;
    return std::move(enc.doc);
}

namespace {

std::string rat_sexpr(const Rational& r) {
    if (r.is_integer()) return r.numerator().get_str();
    return "(/ " + r.numerator().get_str() + " " + r.denominator().get_str() + ")";
}

std::string coef_sexpr(const CoefExpr& ce) {
    if (ce.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [mono, coeff] : ce.terms) {
        std::vector<std::string> factors;
        if (mono.empty() || coeff != Rational(1)) factors.push_back(rat_sexpr(coeff));
        for (const auto& [name, pow] : mono)
            for (unsigned p = 0; p < pow; ++p) factors.push_back(name);
        if (factors.size() == 1)
            parts.push_back(factors.front());
        else
            parts.push_back("(* " + [&] {
                std::string s;
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    if (i) s += " ";
                    s += factors[i];
                }
                return s;
            }() + ")");
    }
    if (parts.size() == 1) return parts.front();
    std::string out = "(+";
    for (const std::string& p : parts) out += " " + p;
    return out + ")";
}

std::string poly_sexpr(const TemplPoly& p) {
    if (p.empty()) return "0";
    std::vector<std::string> parts;
    for (const auto& [exps, ce] : p) {
        std::vector<std::string> factors;
        std::string coef = coef_sexpr(ce);
        bool has_var = false;
        for (unsigned e : exps) has_var = has_var || e > 0;
        if (!has_var) {
            parts.push_back(coef);
            continue;
        }
        if (coef != "1") factors.push_back(coef);
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (unsigned e = 0; e < exps[i]; ++e)
                factors.push_back("X" + std::to_string(i + 1));
        if (factors.size() == 1)
            parts.push_back(factors.front());
        else {
            std::string s = "(*";
            for (const std::string& f : factors) s += " " + f;
            parts.push_back(s + ")");
        }
    }
    if (parts.size() == 1) return parts.front();
    std::string out = "(+";
    for (const std::string& p2 : parts) out += " " + p2;
    return out + ")";
}

std::string atom_sexpr(const EncAtom& atom) {
    std::string rhs = poly_sexpr(atom.rhs);
    if (atom.plus_delta) rhs = "(+ " + rhs + " delta)";
    return std::string("(") + (atom.strict ? ">" : ">=") + " " + poly_sexpr(atom.lhs) + " " + rhs +
           ")";
}

std::string clause_sexpr(const std::vector<EncAtom>& clause) {
    if (clause.size() == 1) return atom_sexpr(clause.front());
    std::string out = "(or";
    for (const EncAtom& a : clause) out += " " + atom_sexpr(a);
    return out + ")";
}

std::string group_sexpr(const EncGroup& g) {
    std::string matrix;
    if (g.cnf.empty()) {
        matrix = "true";
    } else if (g.cnf.size() == 1) {
        matrix = clause_sexpr(g.cnf.front());
    } else {
        matrix = "(and";
        for (const auto& clause : g.cnf) matrix += " " + clause_sexpr(clause);
        matrix += ")";
    }
    if (g.premise == EncGroup::Premise::None) return matrix;
    std::string prem = "(and";
    const char* cmp = g.premise == EncGroup::Premise::StrictMono ? ">" : ">=";
    for (int i = 0; i < g.premise_arity; ++i)
        prem += std::string(" (") + cmp + " X" + std::to_string(i + 1) + " X" +
                std::to_string(g.premise_arity + i + 1) + ")";
    prem += ")";
    return "(=> " + prem + " " + matrix + ")";
}

}  // namespace

std::string emit_smtlib(const FormulaDoc& doc) {
    std::ostringstream out;
    out << "; supbound constraint export\n";
    out << "; criterion: "
        << (doc.kind == CriterionKind::PI ? "pi" : doc.kind == CriterionKind::QI ? "qi" : "dpi")
        << " k=" << doc.k << " d=" << doc.d << "\n";
    out << "(set-logic NRA)\n";
    for (const std::string& name : doc.coeff_names) {
        out << "(declare-const " << name << " Real)\n";
        out << "(assert (>= " << name << " 0))\n";
    }
    if (doc.has_delta) {
        out << "(declare-const delta Real)\n";
        out << "(assert (> delta 0))\n";
        if (doc.pi_mode == PiMode::NatStrict) out << "(assert (>= delta 1))\n";
    }

    std::string matrix;
    if (doc.groups.empty()) {
        matrix = "true";
    } else {
        matrix = "(and\n";
        for (const EncGroup& g : doc.groups) matrix += "  ; " + g.label + "\n  " + group_sexpr(g) + "\n";
        matrix += ")";
    }

    if (doc.universal_count == 0) {
        out << "(assert " << matrix << ")\n";
    } else {
        out << "(assert (forall (";
        for (int i = 0; i < doc.universal_count; ++i) {
            if (i) out << " ";
            out << "(X" << (i + 1) << " Real)";
        }
        out << ")\n  (=> (and";
        for (int i = 0; i < doc.universal_count; ++i) out << " (>= X" << (i + 1) << " 0)";
        out << ")\n" << matrix << ")))\n";
    }
    out << "(check-sat)\n";
    out << "(get-model)\n";
    return out.str();
}

std::map<std::string, Rational> parse_model(const std::string& text) {
    std::map<std::string, Rational> model;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find("define-fun");
        if (pos == std::string::npos) continue;
        std::istringstream ls(line.substr(pos + 10));
        std::string name;
        ls >> name;
        auto real = line.find("Real", pos);
        if (real == std::string::npos) continue;
        std::string value = line.substr(real + 4);
        // Strip parens and read "v", "(/ a b)" or "(- v)".
        std::string cleaned;
        for (char c : value)
            if (c != '(' && c != ')') cleaned += c;
        std::istringstream vs(cleaned);
        std::string tok;
        std::vector<std::string> toks;
        while (vs >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        Rational v;
        if (toks[0] == "/") {
            if (toks.size() < 3) continue;
            v = Rational::from_string(toks[1]) / Rational::from_string(toks[2]);
        } else if (toks[0] == "-") {
            if (toks.size() < 2) continue;
            v = Rational(0) - Rational::from_string(toks[1]);
        } else {
            v = Rational::from_string(toks[0]);
        }
        model[name] = v;
    }
    return model;
}

Assignment assignment_from_model(const Trs& trs, const FormulaDoc& doc,
                                 const std::map<std::string, Rational>& model) {
    Assignment a;
    for (const Symbol& sym : trs.signature.symbols()) {
        const TemplFn& tf = doc.templates.at(sym.name);
        std::vector<Poly> branches;
        for (std::size_t bi = 0; bi < tf.branches.size(); ++bi) {
            Poly p = Poly::zero(sym.arity);
            for (const auto& [exps, ce] : tf.branches[bi]) {
                // Template coefficients are single unknowns by construction.
                Rational value(0);
                for (const auto& [mono, coeff] : ce.terms) {
                    Rational factor = coeff;
                    for (const auto& [name, pow] : mono) {
                        auto it = model.find(name);
                        if (it == model.end())
                            throw std::invalid_argument("missing coefficient '" + name + "'");
                        for (unsigned q = 0; q < pow; ++q) factor *= it->second;
                    }
                    value += factor;
                }
                if (!value.is_nonnegative())
                    throw std::invalid_argument("negative coefficient in model");
                if (!value.is_zero()) p.monos.emplace(exps, value);
            }
            branches.push_back(std::move(p));
        }
        a.fns[sym.name] = MaxPolyFn::from_branches(sym.arity, std::move(branches));
    }
    return a;
}

VerificationReport check_model(const Trs& trs, const FormulaDoc& doc,
                               const std::map<std::string, Rational>& model,
                               const VerifyOptions& opts) {
    Assignment a = assignment_from_model(trs, doc, model);
    return verify(trs, a, doc.kind, doc.pi_mode, opts);
}

}  // namespace supbound
