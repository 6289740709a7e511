// ============================================================================
// groundkit/bars.hpp — Selection trees, bars, and the ground enumeration
// ============================================================================
//
// A selection tree deletes, per feeble node, exactly one child subtree
// (star off) or at most one (star on); feeble nodes inside an already
// deleted subtree impose no choice.  A bar of a selection tree is a node
// set meeting every root-to-leaf path exactly once.  A bar is admissible
// when it is non-trivial (omits the root) and its prefixed ground is not
// {f} itself; the latter can only happen for the sole child of a NegNode
// root, whose signed formula reproduces the whole formula.
//
// Prefixing every negative bar node with ~ yields a ground set; the
// provable grounds of f are exactly these sets (base calculus) or their
// unions (with Am).
//
// ============================================================================

#ifndef GROUNDKIT_BARS_HPP
#define GROUNDKIT_BARS_HPP

#include <cstddef>
#include <vector>

#include "groundkit/calculus.hpp"
#include "groundkit/formula.hpp"
#include "groundkit/grounding_tree.hpp"

namespace groundkit {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

class SelectionTree {
public:
    SelectionTree(const GroundingTree& base, std::vector<NodeId> deleted);

    const GroundingTree& base() const noexcept { return *base_; }
    // Roots of the removed subtrees, each the child of a feeble node.
    const std::vector<NodeId>& deleted() const noexcept { return deleted_; }

    bool survives(NodeId id) const { return alive_[id]; }
    std::vector<NodeId> surviving_children(NodeId id) const;
    std::vector<NodeId> surviving_nodes() const;

private:
    const GroundingTree* base_;
    std::vector<NodeId> deleted_;
    std::vector<bool> alive_;
};

struct Bar {
    std::vector<NodeId> nodes;  // sorted

    // The ground: every node's signed formula, as a canonical set.
    FormulaSet prefixed_ground(const GroundingTree& tree) const;
};

// The complete, duplicate-free list of selection trees, in the order the
// per-feeble-node choices are made (keep left, keep right, then keep both).
std::vector<SelectionTree> selection_trees(const GroundingTree& tree, bool star);

// All admissible bars of s.
std::vector<Bar> bars_of(const SelectionTree& s);

// Grounds of all admissible bars over all selection trees, deduplicated,
// sorted by size then lexicographically.
std::vector<FormulaSet> grounding_bars(const Formula& f, bool star);

// Provable grounds of f under cfg: the grounding bars, closed under
// pairwise union when Am is enabled.  Throws ResourceError when the
// closure would exceed closure_cap distinct sets.
std::vector<FormulaSet> enumerate_grounds(const Formula& f, CalculusConfig cfg,
                                          std::size_t closure_cap = kDefaultClosureCap);

// Decides a claim without materializing the Am closure: with Am, the claim
// holds iff its ground equals the union of all grounding bars it contains
// (and contains at least one).
bool is_ground(const GroundingClaim& claim, CalculusConfig cfg);

}  // namespace groundkit

#endif  // GROUNDKIT_BARS_HPP
