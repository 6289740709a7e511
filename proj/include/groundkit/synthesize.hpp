// ============================================================================
// groundkit/synthesize.hpp — Building checkable derivations from bars
// ============================================================================
//
// A provable ground decomposes into grounding bars.  Each bar's derivation
// starts with the 0-premiss rule at the root of its selection tree and
// walks down with elimination steps, never rewriting an element whose node
// already lies on the bar; several bars are then merged with Am, and a
// final SetC collapses whatever duplicates the merge produced.
//
// ============================================================================

#ifndef GROUNDKIT_SYNTHESIZE_HPP
#define GROUNDKIT_SYNTHESIZE_HPP

#include <map>
#include <vector>

#include "groundkit/bars.hpp"
#include "groundkit/calculus.hpp"
#include "groundkit/formula.hpp"
#include "groundkit/grounding_tree.hpp"

namespace groundkit {

// Precomputes the bar witnesses of one formula; derive() is then cheap to
// call for many grounds of the same formula.
class DerivationSynthesizer {
public:
    DerivationSynthesizer(const Formula& f, CalculusConfig cfg);

    // The selection trees point into tree_.
    DerivationSynthesizer(const DerivationSynthesizer&) = delete;
    DerivationSynthesizer& operator=(const DerivationSynthesizer&) = delete;

    // A checker-valid derivation whose conclusion is exactly the canonical
    // claim.  Throws NotDerivableError when the claim is not provable
    // under the configured variant.
    Derivation derive(const FormulaSet& ground) const;

private:
    struct Witness {
        std::size_t tree_index;
        std::vector<NodeId> bar;  // normalized: no child of a positive NegNode
    };

    Derivation derive_bar(const Witness& w) const;

    Formula formula_;
    CalculusConfig cfg_;
    GroundingTree tree_;
    std::vector<SelectionTree> trees_;
    std::vector<Formula> signed_;             // per node
    std::map<FormulaSet, Witness> witnesses_;  // ground -> first witness found
};

Derivation synthesize(const Formula& f, const FormulaSet& ground, CalculusConfig cfg);
Derivation synthesize(const GroundingClaim& claim, CalculusConfig cfg);

}  // namespace groundkit

#endif  // GROUNDKIT_SYNTHESIZE_HPP
