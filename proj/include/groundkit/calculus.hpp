// ============================================================================
// groundkit/calculus.hpp — The grounding calculus: rules, derivations, checker
// ============================================================================
//
// Rule inventory.  The nine 0-premiss axioms, nine introduction rules and
// nine elimination rules pair conjunction, disjunction and the negated
// connective shapes; SetC and Am are the structural rules.  Rules suffixed
// `Both` belong to the optional ∗ fragment that grounds a disjunction (or a
// negated conjunction) by both components; Am merges two grounds of the
// same formula.  CalculusConfig picks one of the four resulting variants.
//
// Grounds inside derivations are canonical multisets (FormulaBag): axioms
// and introduction steps can legitimately produce repeated elements (the
// conjunction axiom at (p | q) & (p | q) concludes {p | q, p | q}),
// and an elimination step may then rewrite one occurrence while the other
// stays.  SetC is the step that collapses repetitions; it is the identity
// on already-canonical grounds and is always available.
//
// Elimination steps carry the index of the ground element they act on,
// which keeps checking deterministic when several elements are eliminable.
//
// ============================================================================

#ifndef GROUNDKIT_CALCULUS_HPP
#define GROUNDKIT_CALCULUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groundkit/formula.hpp"

namespace groundkit {

// ── Calculus variants ───────────────────────────────────────────────────────

struct CalculusConfig {
    bool star = false;  // ∗-marked rules enabled
    bool am = false;    // Amalgamation enabled

    bool operator==(const CalculusConfig& o) const noexcept {
        return star == o.star && am == o.am;
    }
    std::string to_string() const;
};

// All four variants, base calculus first.
std::vector<CalculusConfig> all_configs();

// ── Rules ───────────────────────────────────────────────────────────────────

enum class RuleId : std::uint8_t {
    AxAnd, AxOrL, AxOrR, AxOrBoth,
    AxNegAndL, AxNegAndR, AxNegAndBoth, AxNegOr, AxNegNeg,
    IntroAnd, IntroOrL, IntroOrR, IntroOrBoth,
    IntroNegAndL, IntroNegAndR, IntroNegAndBoth, IntroNegOr, IntroNegNeg,
    ElimAnd, ElimOrL, ElimOrR, ElimOrBoth,
    ElimNegAndL, ElimNegAndR, ElimNegAndBoth, ElimNegOr, ElimNegNeg,
    SetC, Am,
};

const char* rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);
std::size_t rule_arity(RuleId rule);
bool rule_requires_star(RuleId rule);
bool rule_is_elimination(RuleId rule);

// ── Sequents and derivations ────────────────────────────────────────────────

// One derivable line: a ground multiset and its target.
struct Sequent {
    FormulaBag ground;
    Formula target;

    std::string to_string() const;  // "{a, b} < t"
    GroundingClaim collapsed() const { return GroundingClaim{ground.collapsed(), target}; }

    bool operator==(const Sequent& o) const noexcept {
        return target == o.target && ground == o.ground;
    }
    bool operator!=(const Sequent& o) const noexcept { return !(*this == o); }
};

Sequent parse_sequent(std::string_view text);  // duplicates preserved
Sequent sequent_of(const GroundingClaim& claim);

struct Derivation {
    RuleId rule = RuleId::AxAnd;
    std::vector<Derivation> premises;
    Sequent conclusion;
    std::optional<std::size_t> elim_index;  // elimination steps only

    std::size_t node_count() const;
    std::string to_text() const;  // indented tree, conclusion-first
};

// ── Checking ────────────────────────────────────────────────────────────────

struct CheckResult {
    bool ok = true;
    std::string where;    // path to the violating node ("root.premise[1]...")
    std::string message;  // rule, position and offending formula

    explicit operator bool() const noexcept { return ok; }
};

CheckResult check_ok();
CheckResult check_violation(std::string where, std::string message);

// Validates a single rule instance against its schema under cfg.  Ground
// differences are computed on the canonical multisets.
CheckResult check_step(RuleId rule, const std::vector<Sequent>& premises,
                       const Sequent& conclusion, CalculusConfig cfg,
                       std::optional<std::size_t> elim_index = std::nullopt);

// Validates every node of the tree; each node's premise sequents are its
// children's conclusions by construction.
CheckResult check_derivation(const Derivation& d, CalculusConfig cfg);

// ── Serialization ───────────────────────────────────────────────────────────
// Nested record format: {"rule": ..., "conclusion": "{...} < ...",
// "premises": [...], "elim_index": n?}.

std::string derivation_to_json(const Derivation& d, int indent = 2);
Derivation derivation_from_json(std::string_view text);

}  // namespace groundkit

#endif  // GROUNDKIT_CALCULUS_HPP
