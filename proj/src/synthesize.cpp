#include "groundkit/synthesize.hpp"

#include <algorithm>
#include <cassert>

#include "groundkit/errors.hpp"

namespace groundkit {

namespace {

// Bar nodes that are children of a positive NegNode are unreachable for the
// elimination walk (those two levels are consumed by one rule).  The parent
// has the same signed formula, so lifting the node keeps the ground intact.
std::vector<NodeId> normalize_bar(const GroundingTree& tree, std::vector<NodeId> bar) {
    for (NodeId& b : bar) {
        const GNode& parent = tree.node(tree.node(b).parent);
        if (parent.kind == NodeKind::NegNode && parent.positive() && parent.id != b)
            b = parent.id;
    }
    std::sort(bar.begin(), bar.end());
    return bar;
}

}  // namespace

DerivationSynthesizer::DerivationSynthesizer(const Formula& f, CalculusConfig cfg)
    : formula_(f), cfg_(cfg), tree_(GroundingTree::build(f)), trees_(selection_trees(tree_, cfg.star)) {
    signed_.reserve(tree_.size());
    for (NodeId id = 0; id < tree_.size(); ++id) signed_.push_back(signed_formula(tree_, id));

    for (std::size_t i = 0; i < trees_.size(); ++i)
        for (const Bar& bar : bars_of(trees_[i]))
            witnesses_.emplace(bar.prefixed_ground(tree_),
                               Witness{i, normalize_bar(tree_, bar.nodes)});
}

Derivation DerivationSynthesizer::derive(const FormulaSet& ground) const {
    Derivation result = [&] {
        if (auto it = witnesses_.find(ground); it != witnesses_.end())
            return derive_bar(it->second);

        if (!cfg_.am)
            throw NotDerivableError("'" + GroundingClaim{ground, formula_}.to_string() +
                                    "' is not derivable (not a grounding bar)");

        // Greedy union cover by the bars contained in the ground; their
        // total union is what Am can reach.
        std::vector<const Witness*> chosen;
        FormulaSet covered;
        for (const auto& [bar_ground, witness] : witnesses_) {
            if (!bar_ground.subset_of(ground)) continue;
            if (chosen.empty() || !bar_ground.subset_of(covered)) {
                chosen.push_back(&witness);
                covered = covered.united_with(bar_ground);
            }
        }
        if (chosen.empty() || covered != ground)
            throw NotDerivableError("'" + GroundingClaim{ground, formula_}.to_string() +
                                    "' is not derivable (not a union of grounding bars)");

        Derivation merged = derive_bar(*chosen.front());
        for (std::size_t i = 1; i < chosen.size(); ++i) {
            Derivation next = derive_bar(*chosen[i]);
            Sequent conclusion{merged.conclusion.ground.summed_with(next.conclusion.ground),
                               formula_};
            merged = Derivation{RuleId::Am,
                                {std::move(merged), std::move(next)},
                                std::move(conclusion),
                                std::nullopt};
        }
        return merged;
    }();

    if (result.conclusion.ground.has_duplicates()) {
        Sequent collapsed{FormulaBag(result.conclusion.ground.collapsed().items()), formula_};
        result = Derivation{RuleId::SetC, {std::move(result)}, std::move(collapsed), std::nullopt};
    }
    assert(result.conclusion.ground.collapsed() == ground);
    return result;
}

Derivation DerivationSynthesizer::derive_bar(const Witness& w) const {
    const SelectionTree& s = trees_[w.tree_index];
    std::vector<bool> on_bar(tree_.size(), false);
    for (NodeId b : w.bar) on_bar[b] = true;

    // Which rule keeps (or, with ∗, drops) which children of a feeble node.
    const auto pick = [&](NodeId feeble_node, RuleId left, RuleId right, RuleId both,
                          std::vector<NodeId>& out) -> RuleId {
        out = s.surviving_children(feeble_node);
        assert(!out.empty());
        if (out.size() == 2) return both;
        return out.front() == tree_.node(feeble_node).children.front() ? left : right;
    };

    // 0-premiss step at the root.
    std::vector<NodeId> front;
    RuleId root_rule;
    const GNode& root = tree_.node(tree_.root());
    switch (root.kind) {
        case NodeKind::AndNode:
            root_rule = RuleId::AxAnd;
            front = root.children;
            break;
        case NodeKind::OrNode:
            root_rule = pick(root.id, RuleId::AxOrL, RuleId::AxOrR, RuleId::AxOrBoth, front);
            break;
        case NodeKind::NegNode: {
            const GNode& c = tree_.node(root.children.front());
            switch (c.kind) {
                case NodeKind::AndNode:
                    root_rule = pick(c.id, RuleId::AxNegAndL, RuleId::AxNegAndR,
                                     RuleId::AxNegAndBoth, front);
                    break;
                case NodeKind::OrNode:
                    root_rule = RuleId::AxNegOr;
                    front = c.children;
                    break;
                case NodeKind::NegNode:
                    root_rule = RuleId::AxNegNeg;
                    front = c.children;
                    break;
                default:
                    throw NotDerivableError("no axiom applies to '" + formula_.printed() + "'");
            }
            break;
        }
        default:
            throw NotDerivableError("no axiom applies to '" + formula_.printed() + "'");
    }

    std::vector<Formula> front_signed;
    for (NodeId n : front) front_signed.push_back(signed_[n]);
    Derivation d{root_rule, {}, Sequent{FormulaBag(std::move(front_signed)), formula_},
                 std::nullopt};

    // Elimination walk: expand the lowest surviving non-bar node each step.
    std::sort(front.begin(), front.end());
    while (true) {
        auto it = std::find_if(front.begin(), front.end(),
                               [&](NodeId n) { return !on_bar[n]; });
        if (it == front.end()) break;
        const NodeId n = *it;
        const GNode& node = tree_.node(n);

        RuleId rule;
        std::vector<NodeId> grown;
        switch (node.kind) {
            case NodeKind::AndNode:
                if (node.positive()) {
                    rule = RuleId::ElimAnd;
                    grown = node.children;
                } else {
                    rule = pick(n, RuleId::ElimNegAndL, RuleId::ElimNegAndR,
                                RuleId::ElimNegAndBoth, grown);
                }
                break;
            case NodeKind::OrNode:
                if (node.positive()) {
                    rule = pick(n, RuleId::ElimOrL, RuleId::ElimOrR, RuleId::ElimOrBoth, grown);
                } else {
                    rule = RuleId::ElimNegOr;
                    grown = node.children;
                }
                break;
            case NodeKind::NegNode: {
                if (!node.positive()) {
                    rule = RuleId::ElimNegNeg;
                    grown = node.children;
                    break;
                }
                const GNode& c = tree_.node(node.children.front());
                switch (c.kind) {
                    case NodeKind::AndNode:
                        rule = pick(c.id, RuleId::ElimNegAndL, RuleId::ElimNegAndR,
                                    RuleId::ElimNegAndBoth, grown);
                        break;
                    case NodeKind::OrNode:
                        rule = RuleId::ElimNegOr;
                        grown = c.children;
                        break;
                    case NodeKind::NegNode:
                        rule = RuleId::ElimNegNeg;
                        grown = c.children;
                        break;
                    default:
                        throw std::logic_error("bar walk stuck below a negation leaf");
                }
                break;
            }
            default:
                throw std::logic_error("bar walk reached a leaf outside the bar");
        }

        const Formula element = signed_[n];
        FormulaBag ground = d.conclusion.ground;
        const auto& items = ground.items();
        const std::size_t elim_index = static_cast<std::size_t>(
            std::lower_bound(items.begin(), items.end(), element,
                             [](const Formula& a, const Formula& b) {
                                 return a.printed() < b.printed();
                             }) -
            items.begin());
        ground.remove_one(element);
        for (NodeId g : grown) ground.add(signed_[g]);

        d = Derivation{rule, {std::move(d)}, Sequent{std::move(ground), formula_}, elim_index};

        front.erase(std::find(front.begin(), front.end(), n));
        front.insert(front.end(), grown.begin(), grown.end());
        std::sort(front.begin(), front.end());
    }
    return d;
}

Derivation synthesize(const Formula& f, const FormulaSet& ground, CalculusConfig cfg) {
    return DerivationSynthesizer(f, cfg).derive(ground);
}

Derivation synthesize(const GroundingClaim& claim, CalculusConfig cfg) {
    return DerivationSynthesizer(claim.target, cfg).derive(claim.ground);
}

}  // namespace groundkit
