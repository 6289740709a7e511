// ============================================================================
// groundkit/oracle.hpp — Brute-force provability by rule saturation
// ============================================================================
//
// An independent enumerator of the provable claims for a target formula:
// forward chaining over the calculus rules inside a finite claim universe,
// with no reference to the tree/bar machinery.  Ground formulas that can
// ever appear for target f are f's subformulas plus their single
// negations; targets that can ever appear are f closed under the premise
// targets of the introduction rules.  Both facts are enforced at runtime:
// a rule application that would leave the universe is a hard error.
//
// Grounds are saturated as multisets (lists up to order), with the
// duplicate-removing {}c step applied alongside the eliminations.  With Am
// enabled, merged grounds are exactly the unions of Am-free ones, so the
// saturation closes the Am-free results under pairwise union.
//
// ============================================================================

#ifndef GROUNDKIT_ORACLE_HPP
#define GROUNDKIT_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "groundkit/calculus.hpp"
#include "groundkit/formula.hpp"

namespace groundkit {

inline constexpr std::size_t kDefaultOracleCap = 14;

struct ClaimUniverse {
    Formula target;
    std::vector<Formula> targets;   // premise-target closure, children first
    std::vector<Formula> elements;  // subformulas plus their single negations

    static ClaimUniverse build(const Formula& f);
};

// Everything derivable with target f under cfg, as canonical ground sets,
// sorted by size then lexicographically.  Throws ResourceError when the
// universe has more than cap elements.
std::vector<FormulaSet> saturate(const Formula& f, CalculusConfig cfg,
                                 std::size_t cap = kDefaultOracleCap);

// One record per claim discovered, in discovery order; premises index
// earlier records.  Every record passes check_step under cfg.
struct TranscriptEntry {
    Sequent claim;
    RuleId rule = RuleId::AxAnd;
    std::vector<std::size_t> premises;
};

struct SaturationOutput {
    std::vector<FormulaSet> grounds;
    std::vector<TranscriptEntry> transcript;
};

SaturationOutput saturate_with_transcript(const Formula& f, CalculusConfig cfg,
                                          std::size_t cap = kDefaultOracleCap);

// Same record shape as serialized derivations, with premise indices in
// place of nested records.
std::string transcript_to_json(const std::vector<TranscriptEntry>& transcript,
                               int indent = 2);

// ── Cross-check against the tree characterisation ───────────────────────────

struct CompareReport {
    Formula formula;
    CalculusConfig cfg;
    std::vector<FormulaSet> bars_side;    // enumerate_grounds
    std::vector<FormulaSet> oracle_side;  // saturate
    std::vector<FormulaSet> only_bars;    // symmetric difference, bars side
    std::vector<FormulaSet> only_oracle;  // symmetric difference, oracle side
    bool pass = false;
};

CompareReport compare(const Formula& f, CalculusConfig cfg,
                      std::size_t oracle_cap = kDefaultOracleCap,
                      std::size_t closure_cap = std::size_t{1} << 20);

}  // namespace groundkit

#endif  // GROUNDKIT_ORACLE_HPP
