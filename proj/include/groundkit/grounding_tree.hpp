// ============================================================================
// groundkit/grounding_tree.hpp — Annotated syntactic trees
// ============================================================================
//
// The tree of a formula with negation shapes absorbed into unary nodes:
//
//   x -> _|_   becomes a unary NegNode over the tree of x (the _|_ is not a
//              tree node; no rule of the calculus ever acts on it),
//   x -> y     with y != _|_ is an opaque childless ImpLeaf (no rule
//              decomposes a non-negation implication),
//   _|_        elsewhere is a BottomLeaf, treated like an atom leaf.
//
// A node is positive when it sits strictly below an even number of
// NegNodes, negative otherwise.  The feeble nodes, positive OrNodes and
// negative AndNodes, are where a grounding derivation has to choose a
// branch.  Occurrences are distinct nodes: two occurrences of p are two
// leaves.
//
// ============================================================================

#ifndef GROUNDKIT_GROUNDING_TREE_HPP
#define GROUNDKIT_GROUNDING_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "groundkit/formula.hpp"

namespace groundkit {

using NodeId = std::uint32_t;

enum class NodeKind : unsigned char {
    AtomLeaf, BottomLeaf, ImpLeaf, AndNode, OrNode, NegNode
};

enum class Polarity : unsigned char { Positive, Negative };

struct GNode {
    NodeId id = 0;
    NodeId parent = 0;  // root points at itself
    NodeKind kind = NodeKind::AtomLeaf;
    std::vector<NodeId> children;  // 0 for leaves, 1 for NegNode, 2 otherwise
    Formula subformula = Formula::make_bottom();
    Polarity polarity = Polarity::Positive;
    bool feeble = false;

    bool positive() const noexcept { return polarity == Polarity::Positive; }
    bool is_leaf() const noexcept { return children.empty(); }
};

class GroundingTree {
public:
    static GroundingTree build(const Formula& f);

    NodeId root() const noexcept { return 0; }
    const GNode& node(NodeId id) const { return nodes_.at(id); }
    const std::vector<GNode>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Formula& formula() const noexcept { return formula_; }

    // Longest root-to-leaf path, counted in nodes (a lone leaf has depth 1).
    std::size_t depth() const;

private:
    explicit GroundingTree(Formula f) : formula_(std::move(f)) {}
    Formula formula_;
    std::vector<GNode> nodes_;  // indexed by id, preorder
};

// The node's subformula for positive nodes, its single negation for
// negative ones.  This is the prefixing step of the bar construction.
Formula signed_formula(const GroundingTree& tree, NodeId id);

// Graphviz rendering: label = printed subformula, shape by kind, fill by
// polarity, bold border on feeble nodes.
std::string to_dot(const GroundingTree& tree);

}  // namespace groundkit

#endif  // GROUNDKIT_GROUNDING_TREE_HPP
