// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
//
// supbound: size-bound analysis for constructor term rewriting systems.
// Subcommands: check, dp, verify, synth, encode, check-model, rc, bound, eval.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "supbound/encoder.hpp"
#include "supbound/parser.hpp"
#include "supbound/rcbridge.hpp"
#include "supbound/synthesizer.hpp"

using json = nlohmann::json;
using namespace supbound;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

json witness_json(const std::optional<std::vector<Rational>>& w) {
    if (!w) return nullptr;
    json arr = json::array();
    for (const Rational& x : *w) arr.push_back(x.str());
    return arr;
}

json report_json(const VerificationReport& report) {
    json out;
    out["overall"] = overall_to_string(report.overall);
    out["note"] = report.note;
    out["non_orthogonal_warning"] = report.non_orthogonal_warning;
    json cs = json::array();
    for (const ConstraintResult& c : report.constraints) {
        json row;
        row["description"] = c.description;
        row["verdict"] = verdict_to_string(c.verdict);
        row["witness"] = witness_json(c.witness);
        cs.push_back(row);
    }
    out["constraints"] = cs;
    return out;
}

void emit(bool as_json, const std::string& command, const json& payload,
          const std::string& human) {
    if (as_json) {
        json out;
        out["schema_version"] = 1;
        out["command"] = command;
        out["result"] = payload;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

int overall_exit(Overall o) {
    switch (o) {
        case Overall::Valid: return kExitValid;
        case Overall::Invalid: return kExitInvalid;
        case Overall::Inconclusive: return kExitInconclusive;
    }
    return kExitInputError;
}

CriterionKind parse_kind(const std::string& kind) {
    if (kind == "pi") return CriterionKind::PI;
    if (kind == "qi") return CriterionKind::QI;
    if (kind == "dpi") return CriterionKind::DPI;
    throw CLI::ValidationError("--kind", "expected pi, qi or dpi");
}

PiMode parse_pi_mode(const std::string& mode) {
    if (mode == "nat") return PiMode::NatStrict;
    if (mode == "2a") return PiMode::SubtermStrict2a;
    if (mode == "2b") return PiMode::DeltaStrict2b;
    throw CLI::ValidationError("--pi-mode", "expected nat, 2a or 2b");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sup-interpretation tooling for constructor TRSs"};
    app.require_subcommand(1);

    std::string trs_path, assignment_path, term_text, out_path, model_path;
    std::string kind_str = "qi", pi_mode_str = "nat", domain_str = "nat", rc_str = "measured";
    std::string format = "smt2";
    bool as_json = false, linear_exact = false;
    int k = 1, d = 1, max_size = 6;
    long max_steps = kDefaultNormalizeBudget, dl_budget = kDefaultDlBudget;
    double timeout_s = 120.0;
    unsigned long seed = SamplePlan{}.seed;
    std::string delta_str = "1", epsilon_str = "1", relax_str;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit a JSON object");
        cmd->add_option("--seed", seed, "seed for sampling plans");
    };

    CLI::App* check = app.add_subcommand("check", "parse a TRS and report orthogonality");
    check->add_option("file", trs_path)->required();
    add_common(check);

    CLI::App* dp = app.add_subcommand("dp", "print dependency pairs");
    dp->add_option("file", trs_path)->required();
    add_common(dp);

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify an assignment against a criterion");
    verify_cmd->add_option("file", trs_path)->required();
    verify_cmd->add_option("--assignment", assignment_path)->required();
    verify_cmd->add_option("--kind", kind_str, "pi|qi|dpi");
    verify_cmd->add_option("--pi-mode", pi_mode_str, "nat|2a|2b");
    verify_cmd->add_option("--delta", delta_str, "strict-decrease margin (2b)");
    verify_cmd->add_option("--epsilon", epsilon_str, "strict-subterm margin (2a)");
    verify_cmd->add_option("--relax-nullary", relax_str, "admit nullary constants up to this bound");
    add_common(verify_cmd);

    CLI::App* synth = app.add_subcommand("synth", "synthesize an additive QI/DPI assignment");
    synth->add_option("file", trs_path)->required();
    synth->add_option("--kind", kind_str, "qi|dpi");
    synth->add_option("--domain", domain_str, "nat|rat:<d>");
    synth->add_option("--max-branches", k, "max branch count");
    synth->add_option("--coeff-bound", d, "coefficient bound");
    synth->add_flag("--linear-exact", linear_exact, "exact affine-template path");
    synth->add_option("--timeout", timeout_s, "time budget in seconds");
    synth->add_option("--relax-nullary", relax_str, "admit nullary constants up to this bound");
    synth->add_option("-o,--output", out_path, "write the found assignment here");
    add_common(synth);

    CLI::App* encode_cmd = app.add_subcommand("encode", "export the constraint system");
    encode_cmd->add_option("file", trs_path)->required();
    encode_cmd->add_option("--kind", kind_str, "pi|qi|dpi");
    encode_cmd->add_option("--pi-mode", pi_mode_str, "nat|2a|2b");
    encode_cmd->add_option("-k", k, "max branch count");
    encode_cmd->add_option("-d", d, "max degree");
    encode_cmd->add_option("--format", format, "smt2");
    encode_cmd->add_option("-o,--output", out_path, "output path");

    CLI::App* check_model = app.add_subcommand("check-model", "verify a solver model");
    check_model->add_option("file", trs_path)->required();
    check_model->add_option("model", model_path)->required();
    check_model->add_option("--kind", kind_str, "pi|qi|dpi");
    check_model->add_option("--pi-mode", pi_mode_str, "nat|2a|2b");
    check_model->add_option("-k", k, "max branch count");
    check_model->add_option("-d", d, "max degree");
    check_model->add_option("--relax-nullary", relax_str, "nullary relaxation bound");
    add_common(check_model);

    CLI::App* rc_cmd = app.add_subcommand("rc", "measure runtime complexity");
    rc_cmd->add_option("file", trs_path)->required();
    rc_cmd->add_option("--max-size", max_size)->required();
    rc_cmd->add_option("--budget", dl_budget, "visited-state budget per term");
    add_common(rc_cmd);

    CLI::App* bound = app.add_subcommand("bound", "size bound from a runtime-complexity bound");
    bound->add_option("file", trs_path)->required();
    bound->add_option("--rc", rc_str, "linear:c|poly:c,e|measured");
    bound->add_option("--max-size", max_size, "measurement size for --rc measured");
    add_common(bound);

    CLI::App* eval_cmd = app.add_subcommand("eval", "normalize a term");
    eval_cmd->add_option("file", trs_path)->required();
    eval_cmd->add_option("--term", term_text)->required();
    eval_cmd->add_option("--max-steps", max_steps, "step budget");
    add_common(eval_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        Trs trs = parse_trs(read_file(trs_path));
        SamplePlan plan;
        plan.seed = seed;
        VerifyOptions opts;
        opts.plan = plan;
        opts.delta = Rational::from_string(delta_str);
        opts.epsilon = Rational::from_string(epsilon_str);
        if (!relax_str.empty()) opts.relax_nullary = Rational::from_string(relax_str);

        if (*check) {
            OrthogonalityReport report = check_orthogonality(trs);
            json payload;
            payload["left_linear"] = report.left_linear;
            payload["orthogonal"] = report.orthogonal();
            payload["trs_size"] = trs.trs_size();
            json overlaps = json::array();
            std::string human = "left-linear: " + std::string(report.left_linear ? "yes" : "no") + "\n";
            for (const Overlap& o : report.overlaps) {
                json row;
                row["inner_rule"] = o.inner_rule + 1;
                row["outer_rule"] = o.outer_rule + 1;
                row["position"] = position_to_string(o.pos);
                overlaps.push_back(row);
                human += "overlap: rule " + std::to_string(o.inner_rule + 1) + " into rule " +
                         std::to_string(o.outer_rule + 1) + " at " + position_to_string(o.pos) + "\n";
            }
            payload["overlaps"] = overlaps;
            json symbols = json::array();
            for (const Symbol& s : trs.signature.symbols()) {
                json row;
                row["name"] = s.name;
                row["arity"] = s.arity;
                row["kind"] = s.kind == SymbolKind::Defined ? "defined" : "constructor";
                symbols.push_back(row);
            }
            payload["symbols"] = symbols;
            human += std::string("orthogonal: ") + (report.orthogonal() ? "yes" : "no") + "\n";
            emit(as_json, "check", payload, human);
            return kExitValid;
        }

        if (*dp) {
            auto pairs = dependency_pairs(trs);
            json payload = json::array();
            std::string human;
            for (const DependencyPair& p : pairs) {
                json row;
                row["pair"] = dp_to_string(trs, p);
                row["origin_rule"] = p.origin + 1;
                row["position"] = position_to_string(p.pos);
                payload.push_back(row);
                human += dp_to_string(trs, p) + "\n";
            }
            emit(as_json, "dp", payload, human);
            return kExitValid;
        }

        if (*verify_cmd) {
            Assignment a = parse_assignment(trs, read_file(assignment_path));
            CriterionKind kind = parse_kind(kind_str);
            VerificationReport report = verify(trs, a, kind, parse_pi_mode(pi_mode_str), opts);
            emit(as_json, "verify", report_json(report), report_to_string(report));
            return overall_exit(report.overall);
        }

        if (*synth) {
            SynthesisConfig cfg;
            cfg.kind = parse_kind(kind_str);
            if (cfg.kind == CriterionKind::PI)
                throw std::runtime_error("synthesis targets qi or dpi");
            if (domain_str == "nat") {
                cfg.domain = Domain::Naturals;
            } else if (domain_str.rfind("rat:", 0) == 0) {
                cfg.domain = Domain::BoundedRationals;
                cfg.rat_bound = std::stoi(domain_str.substr(4));
            } else {
                throw std::runtime_error("--domain expects nat or rat:<d>");
            }
            cfg.max_branches = k;
            cfg.coeff_bound = d;
            cfg.nullary_relax = opts.relax_nullary;
            cfg.plan = plan;
            cfg.time_budget =
                std::chrono::milliseconds(static_cast<long>(timeout_s * 1000.0));
            SynthesisResult res =
                linear_exact ? synthesize_linear_template(trs, cfg) : synthesize(trs, cfg);

            json payload;
            std::string human;
            std::string status = res.status == SynthesisResult::Status::Found      ? "Found"
                                 : res.status == SynthesisResult::Status::Exhausted ? "Exhausted"
                                                                                    : "TimedOut";
            payload["status"] = status;
            payload["candidates_tried"] = res.candidates_tried;
            if (res.assignment) {
                payload["assignment"] = assignment_to_string(*res.assignment);
                human += assignment_to_string(*res.assignment);
                if (!out_path.empty()) write_output(out_path, assignment_to_string(*res.assignment));
            } else {
                payload["assignment"] = nullptr;
                human += status + "\n";
            }
            emit(as_json, "synth", payload, human);
            if (res.status == SynthesisResult::Status::Found) return kExitValid;
            if (res.status == SynthesisResult::Status::Exhausted) return kExitInvalid;
            return kExitInconclusive;
        }

        if (*encode_cmd) {
            if (format != "smt2") throw std::runtime_error("--format expects smt2");
            FormulaDoc doc = encode(trs, parse_kind(kind_str), k, d, parse_pi_mode(pi_mode_str));
            write_output(out_path, emit_smtlib(doc));
            return kExitValid;
        }

        if (*check_model) {
            FormulaDoc doc = encode(trs, parse_kind(kind_str), k, d, parse_pi_mode(pi_mode_str));
            auto model = parse_model(read_file(model_path));
            VerificationReport report = supbound::check_model(trs, doc, model, opts);
            emit(as_json, "check-model", report_json(report), report_to_string(report));
            return overall_exit(report.overall);
        }

        if (*rc_cmd) {
            RcReport report = measure_rc(trs, max_size, dl_budget, seed);
            json payload;
            payload["max_size"] = report.max_size;
            payload["approximate"] = report.approximate;
            payload["flagged_nonterminating"] = report.flagged_nonterminating;
            json points = json::array();
            std::string human;
            for (const RcPoint& p : report.points) {
                json row;
                row["size"] = p.size;
                row["rc"] = p.rc ? json(*p.rc) : json(nullptr);
                row["witness"] = p.witness ? json(term_to_string(trs, *p.witness)) : json(nullptr);
                points.push_back(row);
                human += "rc(" + std::to_string(p.size) + ") = " +
                         (p.rc ? std::to_string(*p.rc) : std::string("undefined"));
                if (p.witness) human += "   witness " + term_to_string(trs, *p.witness);
                human += "\n";
            }
            payload["points"] = points;
            if (report.flagged_nonterminating > 0)
                human += "warning: " + std::to_string(report.flagged_nonterminating) +
                         " measurements exceeded the budget (possible nontermination)\n";
            emit(as_json, "rc", payload, human);
            return kExitValid;
        }

        if (*bound) {
            RcFunction rc;
            if (rc_str == "measured") {
                rc = measure_rc(trs, max_size, dl_budget, seed).as_function();
            } else if (rc_str.rfind("linear:", 0) == 0) {
                rc = RcFunction::linear(std::stol(rc_str.substr(7)));
            } else if (rc_str.rfind("poly:", 0) == 0) {
                std::string rest = rc_str.substr(5);
                auto comma = rest.find(',');
                if (comma == std::string::npos) throw std::runtime_error("--rc poly:c,e");
                rc = RcFunction::poly(std::stol(rest.substr(0, comma)),
                                      std::stol(rest.substr(comma + 1)));
            } else {
                throw std::runtime_error("--rc expects linear:c, poly:c,e or measured");
            }
            RcInterp interp = construct_si_from_rc(trs, rc);
            json payload;
            payload["bound"] = interp.pretty();
            payload["trs_size"] = trs.trs_size();
            emit(as_json, "bound", payload, interp.pretty());
            return kExitValid;
        }

        if (*eval_cmd) {
            Term t = parse_term(trs, term_text);
            NormalizeResult res = normalize(trs, t, max_steps);
            json payload;
            payload["term"] = term_to_string(trs, res.term);
            payload["steps"] = res.steps;
            std::string human;
            int code = kExitValid;
            switch (res.status) {
                case NormalizeResult::Status::NormalForm:
                    payload["status"] = "NormalForm";
                    human = term_to_string(trs, res.term) + ", " + std::to_string(res.steps) +
                            " steps\n";
                    break;
                case NormalizeResult::Status::StuckNonValue:
                    payload["status"] = "StuckNonValue";
                    human = "stuck (normal form contains defined symbols): " +
                            term_to_string(trs, res.term) + ", " + std::to_string(res.steps) +
                            " steps\n";
                    break;
                case NormalizeResult::Status::BudgetExceeded:
                    payload["status"] = "BudgetExceeded";
                    human = "budget exceeded after " + std::to_string(res.steps) + " steps\n";
                    code = kExitInconclusive;
                    break;
            }
            emit(as_json, "eval", payload, human);
            return code;
        }
    } catch (const std::exception& e) {
        std::cerr << "supbound: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
