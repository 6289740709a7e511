#include "groundkit/bars.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "groundkit/errors.hpp"

namespace groundkit {

SelectionTree::SelectionTree(const GroundingTree& base, std::vector<NodeId> deleted)
    : base_(&base), deleted_(std::move(deleted)), alive_(base.size(), true) {
    std::sort(deleted_.begin(), deleted_.end());
    // Deletion removes whole subtrees; preorder ids make the sweep simple.
    for (NodeId d : deleted_) {
        std::vector<NodeId> stack{d};
        while (!stack.empty()) {
            NodeId id = stack.back();
            stack.pop_back();
            alive_[id] = false;
            for (NodeId c : base.node(id).children) stack.push_back(c);
        }
    }
}

std::vector<NodeId> SelectionTree::surviving_children(NodeId id) const {
    std::vector<NodeId> out;
    for (NodeId c : base_->node(id).children)
        if (alive_[c]) out.push_back(c);
    return out;
}

std::vector<NodeId> SelectionTree::surviving_nodes() const {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < alive_.size(); ++id)
        if (alive_[id]) out.push_back(id);
    return out;
}

FormulaSet Bar::prefixed_ground(const GroundingTree& tree) const {
    std::vector<Formula> items;
    items.reserve(nodes.size());
    for (NodeId id : nodes) items.push_back(signed_formula(tree, id));
    return FormulaSet(std::move(items));
}

// ── Selection-tree enumeration ──────────────────────────────────────────────

namespace {

std::vector<std::vector<NodeId>> deleted_choices(const GroundingTree& tree,
                                                 const std::vector<NodeId>& feeble, bool star) {
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> current;

    // Whether id lies in a subtree already rooted at a chosen deletion.
    const auto covered = [&](NodeId id) {
        for (NodeId d : current) {
            NodeId walk = id;
            while (true) {
                if (walk == d) return true;
                if (walk == tree.root()) break;
                walk = tree.node(walk).parent;
            }
        }
        return false;
    };

    std::function<void(std::size_t)> choose = [&](std::size_t i) {
        if (i == feeble.size()) {
            out.push_back(current);
            return;
        }
        const NodeId n = feeble[i];
        if (covered(n)) {
            choose(i + 1);
            return;
        }
        const auto& children = tree.node(n).children;
        // Keep left (delete right), keep right (delete left), keep both.
        current.push_back(children[1]);
        choose(i + 1);
        current.pop_back();
        current.push_back(children[0]);
        choose(i + 1);
        current.pop_back();
        if (star) choose(i + 1);
    };
    choose(0);
    return out;
}

}  // namespace

std::vector<SelectionTree> selection_trees(const GroundingTree& tree, bool star) {
    std::vector<NodeId> feeble;
    for (const GNode& n : tree.nodes())
        if (n.feeble) feeble.push_back(n.id);

    std::vector<SelectionTree> out;
    for (auto& deleted : deleted_choices(tree, feeble, star))
        out.emplace_back(tree, std::move(deleted));
    return out;
}

// ── Bar enumeration ─────────────────────────────────────────────────────────

namespace {

// All cuts of the subtree at id: either {id} itself, or one cut per
// surviving child combined across children.
std::vector<std::vector<NodeId>> cuts_below(const SelectionTree& s, NodeId id) {
    std::vector<std::vector<NodeId>> out;
    out.push_back({id});
    const std::vector<NodeId> children = s.surviving_children(id);
    if (children.empty()) return out;

    std::vector<std::vector<NodeId>> combos{{}};
    for (NodeId c : children) {
        std::vector<std::vector<NodeId>> next;
        for (const auto& prefix : combos)
            for (const auto& cut : cuts_below(s, c)) {
                std::vector<NodeId> merged = prefix;
                merged.insert(merged.end(), cut.begin(), cut.end());
                next.push_back(std::move(merged));
            }
        combos = std::move(next);
    }
    out.insert(out.end(), combos.begin(), combos.end());
    return out;
}

}  // namespace

std::vector<Bar> bars_of(const SelectionTree& s) {
    const GroundingTree& tree = s.base();
    const NodeId root = tree.root();
    if (tree.node(root).is_leaf()) return {};  // only the trivial bar exists

    // Every non-trivial bar picks one cut per child subtree of the root.
    std::vector<std::vector<NodeId>> combos{{}};
    for (NodeId c : s.surviving_children(root)) {
        std::vector<std::vector<NodeId>> next;
        for (const auto& prefix : combos)
            for (const auto& cut : cuts_below(s, c)) {
                std::vector<NodeId> merged = prefix;
                merged.insert(merged.end(), cut.begin(), cut.end());
                next.push_back(std::move(merged));
            }
        combos = std::move(next);
    }

    const Formula& whole = tree.formula();
    std::vector<Bar> out;
    for (auto& nodes : combos) {
        std::sort(nodes.begin(), nodes.end());
        Bar bar{std::move(nodes)};
        // Admissibility: the prefixed ground must not reproduce the formula
        // itself.  Only the sole child of a NegNode root can do that.
        FormulaSet ground = bar.prefixed_ground(tree);
        if (ground.size() == 1 && *ground.begin() == whole) continue;
        out.push_back(std::move(bar));
    }
    return out;
}

// ── Grounds ─────────────────────────────────────────────────────────────────

namespace {

std::vector<FormulaSet> sorted_sets(std::set<FormulaSet> sets) {
    std::vector<FormulaSet> out(sets.begin(), sets.end());
    std::stable_sort(out.begin(), out.end(), [](const FormulaSet& a, const FormulaSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<FormulaSet> grounding_bars(const Formula& f, bool star) {
    const GroundingTree tree = GroundingTree::build(f);
    std::set<FormulaSet> grounds;
    for (const SelectionTree& s : selection_trees(tree, star))
        for (const Bar& bar : bars_of(s)) grounds.insert(bar.prefixed_ground(tree));
    return sorted_sets(std::move(grounds));
}

std::vector<FormulaSet> enumerate_grounds(const Formula& f, CalculusConfig cfg,
                                          std::size_t closure_cap) {
    std::vector<FormulaSet> bars = grounding_bars(f, cfg.star);
    if (!cfg.am) return bars;

    // Pairwise-union fixpoint; every finite union of bars is reached.
    std::set<FormulaSet> closure(bars.begin(), bars.end());
    std::vector<FormulaSet> worklist(bars.begin(), bars.end());
    while (!worklist.empty()) {
        FormulaSet current = std::move(worklist.back());
        worklist.pop_back();
        for (const FormulaSet& base : bars) {
            FormulaSet merged = current.united_with(base);
            if (closure.insert(merged).second) {
                if (closure.size() > closure_cap)
                    throw ResourceError("union closure exceeds cap of " +
                                        std::to_string(closure_cap) + " ground sets");
                worklist.push_back(std::move(merged));
            }
        }
    }
    return sorted_sets(std::move(closure));
}

bool is_ground(const GroundingClaim& claim, CalculusConfig cfg) {
    const std::vector<FormulaSet> bars = grounding_bars(claim.target, cfg.star);
    if (!cfg.am)
        return std::find(bars.begin(), bars.end(), claim.ground) != bars.end();

    // Maximal-union test: the union of every bar inside the ground must give
    // back the ground exactly, and at least one bar must contribute.
    FormulaSet covered;
    bool any = false;
    for (const FormulaSet& bar : bars) {
        if (bar.subset_of(claim.ground)) {
            covered = covered.united_with(bar);
            any = true;
        }
    }
    return any && covered == claim.ground;
}

}  // namespace groundkit
