#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmppf/axioms.hpp"
#include "mmppf/checker.hpp"
#include "mmppf/io.hpp"
#include "mmppf/metainfo.hpp"
#include "mmppf/rgtc.hpp"

namespace {

// Exit codes shared by all subcommands.
constexpr int kOk = 0;
constexpr int kLoadError = 1;
constexpr int kAxiomViolation = 2;
constexpr int kFalse = 3;
constexpr int kBudget = 4;
constexpr int kWffViolation = 5;
constexpr int kTranslationError = 6;
constexpr int kOracleDisagreement = 7;
constexpr int kOracleLimit = 8;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mmppf::Error("IO_ERROR", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_validate(const std::string& structure_path, bool json) {
    mmppf::MmppfStructure m = mmppf::load_structure_file(structure_path);
    std::vector<mmppf::AxiomReport> reports = mmppf::validate_all(m);
    std::vector<mmppf::Witness> structural = mmppf::check_transition_totality(m);
    if (json) {
        std::cout << mmppf::report_to_json(m, reports, structural);
    } else {
        for (const mmppf::AxiomReport& r : reports) {
            std::cout << "axiom " << r.axiom_id << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
            for (const mmppf::Witness& w : r.witnesses) {
                std::cout << "  witness";
                if (!w.kind.empty()) std::cout << " [" << w.kind << "]";
                for (const auto& [k, v] : w.fields) std::cout << " " << k << "=" << v;
                std::cout << "\n";
            }
        }
        std::cout << "transition totality: " << (structural.empty() ? "PASS" : "FAIL") << "\n";
        for (const mmppf::Witness& w : structural) {
            std::cout << "  witness";
            for (const auto& [k, v] : w.fields) std::cout << " " << k << "=" << v;
            std::cout << "\n";
        }
    }
    bool ok = structural.empty() &&
              std::all_of(reports.begin(), reports.end(),
                          [](const mmppf::AxiomReport& r) { return r.pass; });
    return ok ? kOk : kAxiomViolation;
}

int wff_gate(const std::vector<mmppf::WffViolation>& violations) {
    for (const mmppf::WffViolation& v : violations) std::cerr << v.message << "\n";
    return kWffViolation;
}

int verdict_exit(mmppf::Verdict v, const std::string& detail, bool json) {
    const char* text = v == mmppf::Verdict::True    ? "true"
                       : v == mmppf::Verdict::False ? "false"
                                                    : "budget exhausted";
    if (json) {
        nlohmann::json doc{{"verdict", text}};
        if (!detail.empty()) doc["detail"] = detail;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    }
    switch (v) {
        case mmppf::Verdict::True: return kOk;
        case mmppf::Verdict::False: return kFalse;
        case mmppf::Verdict::Budget: return kBudget;
    }
    return kFalse;
}

struct CheckArgs {
    std::string structure_path;
    std::string formula_path;
    std::string layer = "pl";
    std::string witness_path;
    std::string profile_path;
    std::string grammar_path;
    int anchor = 0;  // 0 = default max(T)
    long long bound = 10000;
    bool json = false;
};

int run_check(const CheckArgs& args) {
    mmppf::MmppfStructure m = mmppf::load_structure_file(args.structure_path);
    int anchor = args.anchor > 0 ? args.anchor : m.time_count();
    std::string text = read_file(args.formula_path);

    if (args.layer == "pl") {
        mmppf::PlFormula f = mmppf::parse_pl(m.signature, text);
        auto violations = mmppf::check_wff(m.signature, f);
        if (!violations.empty()) return wff_gate(violations);
        mmppf::CheckResult res = mmppf::check(m, anchor, f);
        if (args.json) {
            std::cout << mmppf::trace_to_json(m, res);
        } else {
            std::cout << (res.value ? "true" : "false") << "\n";
            if (res.value) std::cout << mmppf::trace_to_json(m, res);
        }
        return res.value ? kOk : kFalse;
    }

    if (args.layer == "star") {
        mmppf::PlStarFormula f = mmppf::parse_star(m.signature, text);
        auto violations = mmppf::check_wff(m.signature, f);
        if (!violations.empty()) return wff_gate(violations);
        std::optional<mmppf::PlFormula> witness;
        if (!args.witness_path.empty()) {
            witness = mmppf::parse_pl(m.signature, read_file(args.witness_path));
            auto wv = mmppf::check_wff(m.signature, *witness);
            if (!wv.empty()) return wff_gate(wv);
        }
        std::optional<mmppf::AbstractionProfile> profile;
        if (!args.profile_path.empty())
            profile = mmppf::parse_profile(m.signature, read_file(args.profile_path));
        std::string detail;
        mmppf::Verdict v = mmppf::check_star(m, anchor, f, witness, args.bound,
                                             profile ? &*profile : nullptr, &detail);
        return verdict_exit(v, detail, args.json);
    }

    if (args.layer == "cl") {
        mmppf::ClFormula f = mmppf::parse_cl(m.signature, text);
        auto violations = mmppf::check_wff(m.signature, f);
        if (!violations.empty()) return wff_gate(violations);
        std::optional<mmppf::PlStarFormula> witness;
        if (!args.witness_path.empty()) {
            witness = mmppf::parse_star(m.signature, read_file(args.witness_path));
            auto wv = mmppf::check_wff(m.signature, *witness);
            if (!wv.empty()) return wff_gate(wv);
        }
        std::optional<mmppf::RgtcGrammar> grammar;
        if (!args.grammar_path.empty())
            grammar = mmppf::parse_grammar(read_file(args.grammar_path));
        std::string detail;
        mmppf::Verdict v = mmppf::check_cl(m, anchor, f, witness, args.bound,
                                           grammar ? &*grammar : nullptr, &detail);
        return verdict_exit(v, detail, args.json);
    }

    std::cerr << "unknown layer '" << args.layer << "' (expected pl, star or cl)\n";
    return kLoadError;
}

struct TranslateArgs {
    std::string structure_path;
    std::string formula_path;
    std::string direction = "tr1";
    std::string profile_path;
    std::string grammar_path;
    bool emit_grammar = false;
};

int run_translate(const TranslateArgs& args) {
    mmppf::MmppfStructure m = mmppf::load_structure_file(args.structure_path);
    std::string text = read_file(args.formula_path);

    if (args.direction == "tr1") {
        mmppf::PlFormula f = mmppf::parse_pl(m.signature, text);
        auto violations = mmppf::check_wff(m.signature, f);
        if (!violations.empty()) return wff_gate(violations);
        mmppf::AbstractionProfile profile =
            args.profile_path.empty()
                ? mmppf::default_profile(m.signature, f)
                : mmppf::parse_profile(m.signature, read_file(args.profile_path));
        mmppf::PlStarFormula out = mmppf::translate_tr1(m.signature, f, profile);
        std::cout << mmppf::print_star(m.signature, out) << "\n";
        return kOk;
    }

    if (args.direction == "tr2") {
        mmppf::PlStarFormula f = mmppf::parse_star(m.signature, text);
        auto violations = mmppf::check_wff(m.signature, f);
        if (!violations.empty()) return wff_gate(violations);
        if (args.emit_grammar) {
            std::cout << mmppf::print_grammar(mmppf::default_tr2_grammar(m.signature, f));
            return kOk;
        }
        mmppf::RgtcGrammar g = args.grammar_path.empty()
                                   ? mmppf::default_tr2_grammar(m.signature, f)
                                   : mmppf::parse_grammar(read_file(args.grammar_path));
        mmppf::ClFormula out = mmppf::translate_tr2(m.signature, f, g);
        std::cout << mmppf::print_cl(m.signature, out) << "\n";
        return kOk;
    }

    std::cerr << "unknown direction '" << args.direction << "' (expected tr1 or tr2)\n";
    return kLoadError;
}

int run_oracle(const std::string& structure_path, const std::string& formula_path, int anchor_flag,
               bool json) {
    mmppf::MmppfStructure m = mmppf::load_structure_file(structure_path);
    int anchor = anchor_flag > 0 ? anchor_flag : m.time_count();
    mmppf::PlFormula f = mmppf::parse_pl(m.signature, read_file(formula_path));
    auto violations = mmppf::check_wff(m.signature, f);
    if (!violations.empty()) return wff_gate(violations);
    bool fast = mmppf::check(m, anchor, f).value;
    bool slow = mmppf::oracle_check(m, anchor, f);
    if (json) {
        std::cout << nlohmann::json{{"check", fast}, {"oracle", slow}}.dump(2) << "\n";
    } else {
        std::cout << "check: " << (fast ? "true" : "false")
                  << "  oracle: " << (slow ? "true" : "false") << "\n";
    }
    return fast == slow ? kOk : kOracleDisagreement;
}

int run_format(const std::string& path, const std::string& structure_path,
               const std::string& layer) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".rgtc") {
        std::cout << mmppf::print_grammar(mmppf::parse_grammar(read_file(path)));
        return kOk;
    }
    if (path.size() > 4 && path.substr(path.size() - 4) == ".plf") {
        if (structure_path.empty()) {
            std::cerr << "formula files need --structure for their signature\n";
            return kLoadError;
        }
        mmppf::MmppfStructure m = mmppf::load_structure_file(structure_path);
        std::string text = read_file(path);
        if (layer == "pl") {
            mmppf::PlFormula f = mmppf::parse_pl(m.signature, text);
            std::cout << mmppf::print_pl(m.signature, f) << "\n";
        } else if (layer == "star") {
            mmppf::PlStarFormula f = mmppf::parse_star(m.signature, text);
            std::cout << mmppf::print_star(m.signature, f) << "\n";
        } else {
            mmppf::ClFormula f = mmppf::parse_cl(m.signature, text);
            std::cout << mmppf::print_cl(m.signature, f) << "\n";
        }
        return kOk;
    }
    std::cout << mmppf::save_structure(mmppf::load_structure_file(path));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MMPPF structure toolkit"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    auto* validate = app.add_subcommand("validate", "run the eleven axiom checks");
    std::string v_structure;
    validate->add_option("structure", v_structure, "structure file")->required();

    auto* check = app.add_subcommand("check", "decide satisfiability of a formula");
    CheckArgs c;
    check->add_option("structure", c.structure_path, "structure file")->required();
    check->add_option("formula", c.formula_path, "formula file (.plf)")->required();
    check->add_option("--anchor", c.anchor, "perspective anchor time (default: latest)");
    check->add_option("--layer", c.layer, "formula layer: pl, star or cl");
    check->add_option("--witness", c.witness_path, "witness formula one layer down");
    check->add_option("--bound", c.bound, "candidate budget for witness search");
    check->add_option("--profile", c.profile_path, "abstraction profile (JSON)");
    check->add_option("--grammar", c.grammar_path, "translation grammar (.rgtc)");

    auto* translate = app.add_subcommand("translate", "run Tr1 or Tr2 on a formula");
    TranslateArgs t;
    translate->add_option("structure", t.structure_path, "structure file")->required();
    translate->add_option("formula", t.formula_path, "formula file (.plf)")->required();
    translate->add_option("--direction", t.direction, "tr1 (PL to PL*) or tr2 (PL* to CL)");
    translate->add_option("--profile", t.profile_path, "abstraction profile (JSON)");
    translate->add_option("--grammar", t.grammar_path, "translation grammar (.rgtc)");
    translate->add_flag("--emit-grammar", t.emit_grammar,
                        "print the default tr2 grammar for the formula and stop");

    auto* oracle = app.add_subcommand("oracle", "compare the checker against brute force");
    std::string o_structure, o_formula;
    int o_anchor = 0;
    oracle->add_option("structure", o_structure, "structure file")->required();
    oracle->add_option("formula", o_formula, "formula file (.plf)")->required();
    oracle->add_option("--anchor", o_anchor, "perspective anchor time (default: latest)");

    auto* format = app.add_subcommand("format", "canonically re-print an artifact file");
    std::string f_path, f_structure, f_layer = "pl";
    format->add_option("file", f_path, "structure, grammar or formula file")->required();
    format->add_option("--structure", f_structure, "signature source for formula files");
    format->add_option("--layer", f_layer, "formula layer for .plf files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(v_structure, json);
        if (*check) {
            c.json = json;
            return run_check(c);
        }
        if (*translate) return run_translate(t);
        if (*oracle) return run_oracle(o_structure, o_formula, o_anchor, json);
        if (*format) return run_format(f_path, f_structure, f_layer);
    } catch (const mmppf::Error& e) {
        std::cerr << e.what() << "\n";
        const std::string& code = e.code();
        if (code == "MIXED_COMPONENT_CASE" || code == "NO_DERIVATION" ||
            code == "PROFILE_MISMATCH" || code == "TRANSLATION_ERROR" || code == "AMBIGUOUS" ||
            code == "UNBOUND_VARIABLE" || code == "REBOUND_VARIABLE" || code == "TYPE_MISMATCH")
            return kTranslationError;
        if (code == "ORACLE_LIMIT_EXCEEDED") return kOracleLimit;
        return kLoadError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kLoadError;
    }
    return kOk;
}
