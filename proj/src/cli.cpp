#include "groundkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "groundkit/bars.hpp"
#include "groundkit/calculus.hpp"
#include "groundkit/errors.hpp"
#include "groundkit/formula.hpp"
#include "groundkit/grounding_tree.hpp"
#include "groundkit/oracle.hpp"
#include "groundkit/synthesize.hpp"

namespace groundkit::cli {

namespace {

using nlohmann::ordered_json;

struct Caps {
    std::size_t oracle = kDefaultOracleCap;
    std::size_t closure = kDefaultClosureCap;
};

// GROUND_KIT_CAP=N replaces both caps.
std::optional<Caps> caps_from_env(std::ostream& err) {
    Caps caps;
    const char* raw = std::getenv("GROUND_KIT_CAP");
    if (raw == nullptr) return caps;
    try {
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(raw, &pos);
        if (pos != std::string(raw).size()) throw std::invalid_argument(raw);
        caps.oracle = static_cast<std::size_t>(value);
        caps.closure = static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        err << "error: GROUND_KIT_CAP must be a non-negative integer, got '" << raw << "'\n";
        return std::nullopt;
    }
    return caps;
}

struct VariantFlags {
    bool star = false, no_star = false, am = false, no_am = false;

    void attach(CLI::App* sub) {
        sub->add_flag("--star", star, "enable the * rules (ground a disjunction by both disjuncts)");
        sub->add_flag("--no-star", no_star, "disable the * rules (default)");
        sub->add_flag("--am", am, "enable the amalgamation rule");
        sub->add_flag("--no-am", no_am, "disable the amalgamation rule (default)");
    }
    bool conflicting() const { return (star && no_star) || (am && no_am); }
    bool star_pinned() const { return star || no_star; }
    bool am_pinned() const { return am || no_am; }
    CalculusConfig config() const { return CalculusConfig{star, am}; }
};

ordered_json config_json(CalculusConfig cfg) {
    return ordered_json{{"star", cfg.star}, {"am", cfg.am}};
}

ordered_json sets_json(const std::vector<FormulaSet>& sets) {
    ordered_json out = ordered_json::array();
    for (const FormulaSet& s : sets) {
        ordered_json one = ordered_json::array();
        for (const Formula& f : s) one.push_back(f.printed());
        out.push_back(std::move(one));
    }
    return out;
}

int emit_error(bool json, std::ostream& out, std::ostream& err, const std::string& message,
               int code) {
    err << "error: " << message << "\n";
    if (json) out << ordered_json{{"status", "error"}, {"diagnostics", {message}}}.dump(2) << "\n";
    return code;
}

int cmd_grounds(const std::string& text, CalculusConfig cfg, bool json, Caps caps,
                std::ostream& out) {
    const Formula f = parse_formula(text);
    const std::vector<FormulaSet> grounds = enumerate_grounds(f, cfg, caps.closure);
    if (json) {
        ordered_json doc{{"status", "ok"},
                         {"formula", f.printed()},
                         {"config", config_json(cfg)},
                         {"grounds", sets_json(grounds)}};
        out << doc.dump(2) << "\n";
    } else {
        for (const FormulaSet& s : grounds) out << s.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& text, CalculusConfig cfg, bool json, std::ostream& out) {
    const GroundingClaim claim = parse_claim(text);
    const bool yes = is_ground(claim, cfg);
    if (json) {
        ordered_json doc{{"status", yes ? "ok" : "no"},
                         {"claim", claim.to_string()},
                         {"config", config_json(cfg)},
                         {"answer", yes ? "yes" : "no"}};
        out << doc.dump(2) << "\n";
    } else {
        out << (yes ? "yes" : "no") << "\n";
    }
    return yes ? kExitOk : kExitNo;
}

int cmd_prove(const std::string& text, CalculusConfig cfg, bool json, bool verify,
              std::ostream& out, std::ostream& err) {
    const GroundingClaim claim = parse_claim(text);
    Derivation d = synthesize(claim, cfg);
    if (verify) {
        const CheckResult result = check_derivation(d, cfg);
        if (!result) {
            err << "error: synthesized derivation failed verification at " << result.where
                << ": " << result.message << "\n";
            return kExitNo;
        }
    }
    if (json) {
        ordered_json doc{{"status", "ok"},
                         {"claim", claim.to_string()},
                         {"config", config_json(cfg)},
                         {"derivation", ordered_json::parse(derivation_to_json(d))}};
        out << doc.dump(2) << "\n";
    } else {
        out << d.to_text();
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, CalculusConfig cfg, bool json, std::ostream& out,
               std::ostream& err, std::istream& in) {
    std::string document;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        document = buffer.str();
    } else {
        std::ifstream file(path);
        if (!file) return emit_error(json, out, err, "cannot open '" + path + "'", kExitInputError);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        document = buffer.str();
    }
    const Derivation d = derivation_from_json(document);
    const CheckResult result = check_derivation(d, cfg);
    if (json) {
        ordered_json doc{{"status", result.ok ? "ok" : "no"},
                         {"conclusion", d.conclusion.to_string()},
                         {"config", config_json(cfg)}};
        if (!result.ok) doc["diagnostics"] = {result.where + ": " + result.message};
        out << doc.dump(2) << "\n";
    } else if (result.ok) {
        out << "valid: " << d.conclusion.to_string() << "\n";
    } else {
        out << "invalid at " << result.where << ": " << result.message << "\n";
    }
    return result.ok ? kExitOk : kExitNo;
}

int cmd_tree(const std::string& text, bool json, std::ostream& out) {
    const Formula f = parse_formula(text);
    const std::string dot = to_dot(GroundingTree::build(f));
    if (json) {
        ordered_json doc{{"status", "ok"}, {"formula", f.printed()}, {"dot", dot}};
        out << doc.dump(2) << "\n";
    } else {
        out << dot;
    }
    return kExitOk;
}

int cmd_compare(const std::string& text, const VariantFlags& flags, bool json, Caps caps,
                std::ostream& out) {
    const Formula f = parse_formula(text);
    std::vector<CalculusConfig> configs;
    for (CalculusConfig cfg : all_configs()) {
        if (flags.star_pinned() && cfg.star != flags.star) continue;
        if (flags.am_pinned() && cfg.am != flags.am) continue;
        configs.push_back(cfg);
    }

    std::size_t passed = 0;
    ordered_json reports = ordered_json::array();
    std::ostringstream text_out;
    for (CalculusConfig cfg : configs) {
        const CompareReport report = compare(f, cfg, caps.oracle, caps.closure);
        if (report.pass) ++passed;
        if (json) {
            ordered_json r{{"config", config_json(cfg)},
                           {"pass", report.pass},
                           {"bars_side", sets_json(report.bars_side)},
                           {"oracle_side", sets_json(report.oracle_side)},
                           {"only_bars", sets_json(report.only_bars)},
                           {"only_oracle", sets_json(report.only_oracle)}};
            reports.push_back(std::move(r));
        } else {
            text_out << cfg.to_string() << ": " << (report.pass ? "pass" : "FAIL") << " ("
                     << report.bars_side.size() << " grounds)";
            text_out << "\n";
            if (!report.pass) {
                for (const FormulaSet& s : report.only_bars)
                    text_out << "  only bars side:   " << s.to_string() << "\n";
                for (const FormulaSet& s : report.only_oracle)
                    text_out << "  only oracle side: " << s.to_string() << "\n";
            }
        }
    }
    const bool all_pass = passed == configs.size();
    if (json) {
        ordered_json doc{{"status", all_pass ? "ok" : "no"},
                         {"formula", f.printed()},
                         {"reports", std::move(reports)}};
        out << doc.dump(2) << "\n";
    } else {
        text_out << passed << "/" << configs.size() << " configurations agree\n";
        out << text_out.str();
    }
    return all_pass ? kExitOk : kExitNo;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"groundkit: decision procedures for a propositional grounding calculus"};
    app.require_subcommand(1);

    std::string grounds_formula, check_claim, prove_claim, verify_path = "-", tree_formula,
                compare_formula;
    std::string format_grounds = "text", format_check = "text", format_prove = "text",
                format_verify = "text", format_tree = "text", format_compare = "text";
    bool prove_verify = false;
    VariantFlags grounds_flags, check_flags, prove_flags, verify_flags, compare_flags;

    const auto add_format = [](CLI::App* sub, std::string& target) {
        sub->add_option("--format", target, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* grounds = app.add_subcommand("grounds", "enumerate every provable ground of a formula");
    grounds->add_option("formula", grounds_formula, "the grounded formula")->required();
    grounds_flags.attach(grounds);
    add_format(grounds, format_grounds);

    CLI::App* check = app.add_subcommand("check", "decide a grounding claim {a1, ...} < f");
    check->add_option("claim", check_claim, "the claim to decide")->required();
    check_flags.attach(check);
    add_format(check, format_check);

    CLI::App* prove = app.add_subcommand("prove", "synthesize a checkable derivation for a claim");
    prove->add_option("claim", prove_claim, "the claim to derive")->required();
    prove->add_flag("--verify", prove_verify, "re-check the derivation before printing");
    prove_flags.attach(prove);
    add_format(prove, format_prove);

    CLI::App* verify = app.add_subcommand("verify", "check a serialized derivation");
    verify->add_option("file", verify_path, "derivation document, '-' for stdin");
    verify_flags.attach(verify);
    add_format(verify, format_verify);

    CLI::App* tree = app.add_subcommand("tree", "emit the annotated syntactic tree as DOT");
    tree->add_option("formula", tree_formula, "the formula to render")->required();
    add_format(tree, format_tree);

    CLI::App* cmp = app.add_subcommand("compare", "cross-check ground enumeration against rule saturation");
    cmp->add_option("formula", compare_formula, "the formula to cross-check")->required();
    compare_flags.attach(cmp);
    add_format(cmp, format_compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const std::optional<Caps> caps = caps_from_env(err);
    if (!caps) return kExitInputError;

    const auto dispatch = [&]() -> int {
        if (app.got_subcommand(grounds)) {
            if (grounds_flags.conflicting())
                return emit_error(format_grounds == "json", out, err,
                                  "conflicting variant flags", kExitInputError);
            return cmd_grounds(grounds_formula, grounds_flags.config(),
                               format_grounds == "json", *caps, out);
        }
        if (app.got_subcommand(check)) {
            if (check_flags.conflicting())
                return emit_error(format_check == "json", out, err, "conflicting variant flags",
                                  kExitInputError);
            return cmd_check(check_claim, check_flags.config(), format_check == "json", out);
        }
        if (app.got_subcommand(prove)) {
            if (prove_flags.conflicting())
                return emit_error(format_prove == "json", out, err, "conflicting variant flags",
                                  kExitInputError);
            return cmd_prove(prove_claim, prove_flags.config(), format_prove == "json",
                             prove_verify, out, err);
        }
        if (app.got_subcommand(verify)) {
            if (verify_flags.conflicting())
                return emit_error(format_verify == "json", out, err, "conflicting variant flags",
                                  kExitInputError);
            return cmd_verify(verify_path, verify_flags.config(), format_verify == "json", out,
                              err, in);
        }
        if (app.got_subcommand(tree)) return cmd_tree(tree_formula, format_tree == "json", out);
        if (app.got_subcommand(cmp)) {
            if (compare_flags.conflicting())
                return emit_error(format_compare == "json", out, err,
                                  "conflicting variant flags", kExitInputError);
            return cmd_compare(compare_formula, compare_flags, format_compare == "json", *caps,
                               out);
        }
        err << "error: no subcommand\n";
        return kExitInputError;
    };

    const bool json_mode = [&] {
        if (app.got_subcommand(grounds)) return format_grounds == "json";
        if (app.got_subcommand(check)) return format_check == "json";
        if (app.got_subcommand(prove)) return format_prove == "json";
        if (app.got_subcommand(verify)) return format_verify == "json";
        if (app.got_subcommand(tree)) return format_tree == "json";
        return format_compare == "json";
    }();

    try {
        return dispatch();
    } catch (const ParseError& e) {
        return emit_error(json_mode, out, err, e.what(), kExitInputError);
    } catch (const ResourceError& e) {
        return emit_error(json_mode, out, err, e.what(), kExitResourceError);
    } catch (const NotDerivableError& e) {
        err << "error: " << e.what() << "\n";
        if (json_mode)
            out << ordered_json{{"status", "no"}, {"diagnostics", {e.what()}}}.dump(2) << "\n";
        else
            out << "not derivable\n";
        return kExitNo;
    }
}

}  // namespace groundkit::cli
