#include "groundkit/calculus.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace groundkit {

std::string CalculusConfig::to_string() const {
    std::string out = "star=";
    out += star ? "true" : "false";
    out += " am=";
    out += am ? "true" : "false";
    return out;
}

std::vector<CalculusConfig> all_configs() {
    return {{false, false}, {true, false}, {false, true}, {true, true}};
}

// ── Rule metadata ───────────────────────────────────────────────────────────

namespace {

struct RuleInfo {
    const char* name;
    std::size_t arity;
    bool star;
    bool elim;
};

constexpr std::array<RuleInfo, 29> kRules{{
    {"AxAnd", 0, false, false},
    {"AxOrL", 0, false, false},
    {"AxOrR", 0, false, false},
    {"AxOrBoth", 0, true, false},
    {"AxNegAndL", 0, false, false},
    {"AxNegAndR", 0, false, false},
    {"AxNegAndBoth", 0, true, false},
    {"AxNegOr", 0, false, false},
    {"AxNegNeg", 0, false, false},
    {"IntroAnd", 2, false, false},
    {"IntroOrL", 1, false, false},
    {"IntroOrR", 1, false, false},
    {"IntroOrBoth", 2, true, false},
    {"IntroNegAndL", 1, false, false},
    {"IntroNegAndR", 1, false, false},
    {"IntroNegAndBoth", 2, true, false},
    {"IntroNegOr", 2, false, false},
    {"IntroNegNeg", 1, false, false},
    {"ElimAnd", 1, false, true},
    {"ElimOrL", 1, false, true},
    {"ElimOrR", 1, false, true},
    {"ElimOrBoth", 1, true, true},
    {"ElimNegAndL", 1, false, true},
    {"ElimNegAndR", 1, false, true},
    {"ElimNegAndBoth", 1, true, true},
    {"ElimNegOr", 1, false, true},
    {"ElimNegNeg", 1, false, true},
    {"SetC", 1, false, false},
    {"Am", 2, false, false},
}};

const RuleInfo& info(RuleId rule) { return kRules[static_cast<std::size_t>(rule)]; }

}  // namespace

const char* rule_name(RuleId rule) { return info(rule).name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kRules.size(); ++i)
        if (name == kRules[i].name) return static_cast<RuleId>(i);
    return std::nullopt;
}

std::size_t rule_arity(RuleId rule) { return info(rule).arity; }
bool rule_requires_star(RuleId rule) { return info(rule).star; }
bool rule_is_elimination(RuleId rule) { return info(rule).elim; }

// ── Sequents ────────────────────────────────────────────────────────────────

std::string Sequent::to_string() const {
    return ground.to_string() + " < " + target.printed();
}

Sequent parse_sequent(std::string_view text) {
    RawClaim raw = parse_claim_raw(text);
    return Sequent{FormulaBag(std::move(raw.ground_items)), raw.target};
}

Sequent sequent_of(const GroundingClaim& claim) {
    return Sequent{FormulaBag(claim.ground.items()), claim.target};
}

std::size_t Derivation::node_count() const {
    std::size_t n = 1;
    for (const Derivation& p : premises) n += p.node_count();
    return n;
}

std::string Derivation::to_text() const {
    std::ostringstream out;
    std::function<void(const Derivation&, int)> render = [&](const Derivation& d, int depth) {
        for (int i = 0; i < depth; ++i) out << "  ";
        out << rule_name(d.rule);
        if (d.elim_index) out << " (elim " << *d.elim_index << ")";
        out << ": " << d.conclusion.to_string() << "\n";
        for (const Derivation& p : d.premises) render(p, depth + 1);
    };
    render(*this, 0);
    return out.str();
}

// ── Shape decomposition ─────────────────────────────────────────────────────

namespace {

struct Pair {
    Formula a, b;
};

std::optional<Pair> as_and(const Formula& f) {
    if (f.kind() != Kind::And) return std::nullopt;
    return Pair{f.left(), f.right()};
}

std::optional<Pair> as_or(const Formula& f) {
    if (f.kind() != Kind::Or) return std::nullopt;
    return Pair{f.left(), f.right()};
}

std::optional<Pair> as_neg_and(const Formula& f) {
    if (!f.is_negation()) return std::nullopt;
    return as_and(f.negation_body());
}

std::optional<Pair> as_neg_or(const Formula& f) {
    if (!f.is_negation()) return std::nullopt;
    return as_or(f.negation_body());
}

std::optional<Formula> as_neg_neg(const Formula& f) {
    if (!f.is_negation() || !f.negation_body().is_negation()) return std::nullopt;
    return f.negation_body().negation_body();
}

FormulaBag bag_of(std::initializer_list<Formula> items) {
    return FormulaBag(std::vector<Formula>(items));
}

}  // namespace

CheckResult check_ok() { return CheckResult{}; }

CheckResult check_violation(std::string where, std::string message) {
    return CheckResult{false, std::move(where), std::move(message)};
}

// ── Step checking ───────────────────────────────────────────────────────────

namespace {

CheckResult fail(RuleId rule, const std::string& position, const std::string& detail) {
    return check_violation("", std::string(rule_name(rule)) + ": " + position + ": " + detail);
}

CheckResult check_ground_equals(RuleId rule, const FormulaBag& actual,
                                const FormulaBag& expected) {
    if (actual == expected) return check_ok();
    // Name one offending formula: something expected but missing, or present
    // but unexpected.
    for (const Formula& f : expected)
        if (actual.count(f) != expected.count(f))
            return fail(rule, "conclusion ground",
                        "expected " + expected.to_string() + ", found " + actual.to_string() +
                            " (mismatch at '" + f.printed() + "')");
    for (const Formula& f : actual)
        if (actual.count(f) != expected.count(f))
            return fail(rule, "conclusion ground",
                        "expected " + expected.to_string() + ", found " + actual.to_string() +
                            " (mismatch at '" + f.printed() + "')");
    return fail(rule, "conclusion ground",
                "expected " + expected.to_string() + ", found " + actual.to_string());
}

CheckResult check_axiom(RuleId rule, const Sequent& conclusion) {
    const Formula& t = conclusion.target;
    switch (rule) {
        case RuleId::AxAnd:
            if (auto p = as_and(t))
                return check_ground_equals(rule, conclusion.ground, bag_of({p->a, p->b}));
            return fail(rule, "conclusion target", "'" + t.printed() + "' is not a conjunction");
        case RuleId::AxOrL:
        case RuleId::AxOrR:
        case RuleId::AxOrBoth:
            if (auto p = as_or(t)) {
                if (rule == RuleId::AxOrL)
                    return check_ground_equals(rule, conclusion.ground, bag_of({p->a}));
                if (rule == RuleId::AxOrR)
                    return check_ground_equals(rule, conclusion.ground, bag_of({p->b}));
                return check_ground_equals(rule, conclusion.ground, bag_of({p->a, p->b}));
            }
            return fail(rule, "conclusion target", "'" + t.printed() + "' is not a disjunction");
        case RuleId::AxNegAndL:
        case RuleId::AxNegAndR:
        case RuleId::AxNegAndBoth:
            if (auto p = as_neg_and(t)) {
                if (rule == RuleId::AxNegAndL)
                    return check_ground_equals(rule, conclusion.ground,
                                               bag_of({Formula::make_not(p->a)}));
                if (rule == RuleId::AxNegAndR)
                    return check_ground_equals(rule, conclusion.ground,
                                               bag_of({Formula::make_not(p->b)}));
                return check_ground_equals(
                    rule, conclusion.ground,
                    bag_of({Formula::make_not(p->a), Formula::make_not(p->b)}));
            }
            return fail(rule, "conclusion target",
                        "'" + t.printed() + "' is not a negated conjunction");
        case RuleId::AxNegOr:
            if (auto p = as_neg_or(t))
                return check_ground_equals(
                    rule, conclusion.ground,
                    bag_of({Formula::make_not(p->a), Formula::make_not(p->b)}));
            return fail(rule, "conclusion target",
                        "'" + t.printed() + "' is not a negated disjunction");
        case RuleId::AxNegNeg:
            if (auto a = as_neg_neg(t))
                return check_ground_equals(rule, conclusion.ground, bag_of({*a}));
            return fail(rule, "conclusion target",
                        "'" + t.printed() + "' is not a double negation");
        default:
            return fail(rule, "rule", "not an axiom");
    }
}

CheckResult check_intro(RuleId rule, const std::vector<Sequent>& premises,
                        const Sequent& conclusion) {
    const Formula& t = conclusion.target;

    const auto premise_target = [&](std::size_t i, const Formula& expected) -> CheckResult {
        if (premises[i].target != expected)
            return fail(rule, "premise " + std::to_string(i + 1) + " target",
                        "expected '" + expected.printed() + "', found '" +
                            premises[i].target.printed() + "'");
        return check_ok();
    };
    const auto ground_is_first = [&]() {
        return check_ground_equals(rule, conclusion.ground, premises[0].ground);
    };
    const auto ground_is_sum = [&]() {
        return check_ground_equals(rule, conclusion.ground,
                                   premises[0].ground.summed_with(premises[1].ground));
    };

    switch (rule) {
        case RuleId::IntroAnd: {
            auto p = as_and(t);
            if (!p) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a conjunction");
            if (auto r = premise_target(0, p->a); !r) return r;
            if (auto r = premise_target(1, p->b); !r) return r;
            return ground_is_sum();
        }
        case RuleId::IntroOrL:
        case RuleId::IntroOrR: {
            auto p = as_or(t);
            if (!p) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a disjunction");
            if (auto r = premise_target(0, rule == RuleId::IntroOrL ? p->a : p->b); !r) return r;
            return ground_is_first();
        }
        case RuleId::IntroOrBoth: {
            auto p = as_or(t);
            if (!p) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a disjunction");
            if (auto r = premise_target(0, p->a); !r) return r;
            if (auto r = premise_target(1, p->b); !r) return r;
            return ground_is_sum();
        }
        case RuleId::IntroNegAndL:
        case RuleId::IntroNegAndR: {
            auto p = as_neg_and(t);
            if (!p) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a negated conjunction");
            Formula want = Formula::make_not(rule == RuleId::IntroNegAndL ? p->a : p->b);
            if (auto r = premise_target(0, want); !r) return r;
            return ground_is_first();
        }
        case RuleId::IntroNegAndBoth: {
            auto p = as_neg_and(t);
            if (!p) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a negated conjunction");
            if (auto r = premise_target(0, Formula::make_not(p->a)); !r) return r;
            if (auto r = premise_target(1, Formula::make_not(p->b)); !r) return r;
            return ground_is_sum();
        }
        case RuleId::IntroNegOr: {
            auto p = as_neg_or(t);
            if (!p) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a negated disjunction");
            if (auto r = premise_target(0, Formula::make_not(p->a)); !r) return r;
            if (auto r = premise_target(1, Formula::make_not(p->b)); !r) return r;
            return ground_is_sum();
        }
        case RuleId::IntroNegNeg: {
            auto a = as_neg_neg(t);
            if (!a) return fail(rule, "conclusion target",
                                "'" + t.printed() + "' is not a double negation");
            if (auto r = premise_target(0, *a); !r) return r;
            return ground_is_first();
        }
        default:
            return fail(rule, "rule", "not an introduction rule");
    }
}

CheckResult check_elim(RuleId rule, const std::vector<Sequent>& premises,
                       const Sequent& conclusion, std::optional<std::size_t> elim_index) {
    const Sequent& premise = premises[0];
    if (premise.target != conclusion.target)
        return fail(rule, "conclusion target",
                    "elimination must keep the target; premise has '" +
                        premise.target.printed() + "', conclusion has '" +
                        conclusion.target.printed() + "'");
    if (!elim_index)
        return fail(rule, "elim_index", "elimination step without an element index");
    if (*elim_index >= premise.ground.size())
        return fail(rule, "elim_index",
                    "index " + std::to_string(*elim_index) + " out of range for ground " +
                        premise.ground.to_string());
    const Formula element = premise.ground.at(*elim_index);

    std::vector<Formula> replacement;
    switch (rule) {
        case RuleId::ElimAnd: {
            auto p = as_and(element);
            if (!p) return fail(rule, "ground element",
                                "'" + element.printed() + "' is not a conjunction");
            replacement = {p->a, p->b};
            break;
        }
        case RuleId::ElimOrL:
        case RuleId::ElimOrR:
        case RuleId::ElimOrBoth: {
            auto p = as_or(element);
            if (!p) return fail(rule, "ground element",
                                "'" + element.printed() + "' is not a disjunction");
            if (rule == RuleId::ElimOrL) replacement = {p->a};
            else if (rule == RuleId::ElimOrR) replacement = {p->b};
            else replacement = {p->a, p->b};
            break;
        }
        case RuleId::ElimNegAndL:
        case RuleId::ElimNegAndR:
        case RuleId::ElimNegAndBoth: {
            auto p = as_neg_and(element);
            if (!p) return fail(rule, "ground element",
                                "'" + element.printed() + "' is not a negated conjunction");
            if (rule == RuleId::ElimNegAndL) replacement = {Formula::make_not(p->a)};
            else if (rule == RuleId::ElimNegAndR) replacement = {Formula::make_not(p->b)};
            else replacement = {Formula::make_not(p->a), Formula::make_not(p->b)};
            break;
        }
        case RuleId::ElimNegOr: {
            auto p = as_neg_or(element);
            if (!p) return fail(rule, "ground element",
                                "'" + element.printed() + "' is not a negated disjunction");
            replacement = {Formula::make_not(p->a), Formula::make_not(p->b)};
            break;
        }
        case RuleId::ElimNegNeg: {
            auto a = as_neg_neg(element);
            if (!a) return fail(rule, "ground element",
                                "'" + element.printed() + "' is not a double negation");
            replacement = {*a};
            break;
        }
        default:
            return fail(rule, "rule", "not an elimination rule");
    }

    FormulaBag expected = premise.ground;
    expected.remove_one(element);
    for (const Formula& f : replacement) expected.add(f);
    return check_ground_equals(rule, conclusion.ground, expected);
}

}  // namespace

CheckResult check_step(RuleId rule, const std::vector<Sequent>& premises,
                       const Sequent& conclusion, CalculusConfig cfg,
                       std::optional<std::size_t> elim_index) {
    if (premises.size() != rule_arity(rule))
        return fail(rule, "premises",
                    "expected " + std::to_string(rule_arity(rule)) + " premise(s), found " +
                        std::to_string(premises.size()));
    if (rule_requires_star(rule) && !cfg.star)
        return fail(rule, "config", "* rule disabled (star fragment is off)");
    if (rule == RuleId::Am && !cfg.am)
        return fail(rule, "config", "Am rule disabled (amalgamation is off)");

    if (rule == RuleId::SetC) {
        if (premises[0].target != conclusion.target)
            return fail(rule, "conclusion target", "SetC must keep the target");
        FormulaBag expected(premises[0].ground.collapsed().items());
        return check_ground_equals(rule, conclusion.ground, expected);
    }
    if (rule == RuleId::Am) {
        if (premises[0].target != conclusion.target || premises[1].target != conclusion.target)
            return fail(rule, "premise target",
                        "Am merges two grounds of the same formula; targets differ");
        return check_ground_equals(rule, conclusion.ground,
                                   premises[0].ground.summed_with(premises[1].ground));
    }
    if (rule_arity(rule) == 0) return check_axiom(rule, conclusion);
    if (rule_is_elimination(rule)) return check_elim(rule, premises, conclusion, elim_index);
    return check_intro(rule, premises, conclusion);
}

namespace {

CheckResult check_node(const Derivation& d, CalculusConfig cfg, const std::string& path) {
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
        CheckResult r = check_node(d.premises[i], cfg,
                                   path + ".premise[" + std::to_string(i) + "]");
        if (!r) return r;
    }
    std::vector<Sequent> premise_sequents;
    premise_sequents.reserve(d.premises.size());
    for (const Derivation& p : d.premises) premise_sequents.push_back(p.conclusion);
    CheckResult r = check_step(d.rule, premise_sequents, d.conclusion, cfg, d.elim_index);
    if (!r) {
        r.where = path;
        return r;
    }
    return check_ok();
}

}  // namespace

CheckResult check_derivation(const Derivation& d, CalculusConfig cfg) {
    return check_node(d, cfg, "root");
}

// ── Serialization ───────────────────────────────────────────────────────────

namespace {

nlohmann::ordered_json derivation_to_ojson(const Derivation& d) {
    nlohmann::ordered_json j;
    j["rule"] = rule_name(d.rule);
    j["conclusion"] = d.conclusion.to_string();
    if (d.elim_index) j["elim_index"] = *d.elim_index;
    nlohmann::ordered_json premises = nlohmann::ordered_json::array();
    for (const Derivation& p : d.premises) premises.push_back(derivation_to_ojson(p));
    j["premises"] = std::move(premises);
    return j;
}

Derivation derivation_from_ojson(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError(0, {}, "derivation record must be an object");
    if (!j.contains("rule") || !j["rule"].is_string())
        throw ParseError(0, {}, "derivation record is missing a 'rule' string");
    const std::string name = j["rule"].get<std::string>();
    auto rule = rule_from_name(name);
    if (!rule) throw ParseError(0, {}, "unknown rule '" + name + "'");
    if (!j.contains("conclusion") || !j["conclusion"].is_string())
        throw ParseError(0, {}, "derivation record is missing a 'conclusion' string");

    Derivation d{*rule, {}, parse_sequent(j["conclusion"].get<std::string>()), std::nullopt};
    if (j.contains("elim_index")) {
        if (!j["elim_index"].is_number_unsigned())
            throw ParseError(0, {}, "'elim_index' must be a non-negative integer");
        d.elim_index = j["elim_index"].get<std::size_t>();
    }
    if (j.contains("premises")) {
        if (!j["premises"].is_array())
            throw ParseError(0, {}, "'premises' must be an array");
        for (const auto& p : j["premises"]) d.premises.push_back(derivation_from_ojson(p));
    }
    return d;
}

}  // namespace

std::string derivation_to_json(const Derivation& d, int indent) {
    return derivation_to_ojson(d).dump(indent);
}

Derivation derivation_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, {}, std::string("invalid derivation document: ") + e.what());
    }
    return derivation_from_ojson(j);
}

}  // namespace groundkit
