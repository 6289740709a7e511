#include "groundkit/grounding_tree.hpp"

#include <functional>
#include <sstream>

namespace groundkit {

GroundingTree GroundingTree::build(const Formula& f) {
    GroundingTree tree(f);

    // Preorder construction; neg_depth counts NegNode ancestors.
    std::function<NodeId(const Formula&, NodeId, unsigned)> grow =
        [&](const Formula& g, NodeId parent, unsigned neg_depth) -> NodeId {
        const NodeId id = static_cast<NodeId>(tree.nodes_.size());
        GNode node;
        node.id = id;
        node.parent = parent;
        node.subformula = g;
        node.polarity = (neg_depth % 2 == 0) ? Polarity::Positive : Polarity::Negative;
        if (g.is_negation()) {
            node.kind = NodeKind::NegNode;
        } else {
            switch (g.kind()) {
                case Kind::Atom: node.kind = NodeKind::AtomLeaf; break;
                case Kind::Bottom: node.kind = NodeKind::BottomLeaf; break;
                case Kind::Imp: node.kind = NodeKind::ImpLeaf; break;
                case Kind::And: node.kind = NodeKind::AndNode; break;
                case Kind::Or: node.kind = NodeKind::OrNode; break;
            }
        }
        node.feeble = (node.kind == NodeKind::OrNode && node.positive()) ||
                      (node.kind == NodeKind::AndNode && !node.positive());
        tree.nodes_.push_back(std::move(node));

        if (g.is_negation()) {
            const NodeId child = grow(g.negation_body(), id, neg_depth + 1);
            tree.nodes_[id].children.push_back(child);
        } else if (g.kind() == Kind::And || g.kind() == Kind::Or) {
            const NodeId l = grow(g.left(), id, neg_depth);
            tree.nodes_[id].children.push_back(l);
            const NodeId r = grow(g.right(), id, neg_depth);
            tree.nodes_[id].children.push_back(r);
        }
        return id;
    };
    grow(f, 0, 0);
    return tree;
}

std::size_t GroundingTree::depth() const {
    std::function<std::size_t(NodeId)> walk = [&](NodeId id) -> std::size_t {
        std::size_t best = 0;
        for (NodeId c : nodes_[id].children) best = std::max(best, walk(c));
        return best + 1;
    };
    return walk(0);
}

Formula signed_formula(const GroundingTree& tree, NodeId id) {
    const GNode& n = tree.node(id);
    return n.positive() ? n.subformula : Formula::make_not(n.subformula);
}

namespace {

const char* dot_shape(NodeKind k) {
    switch (k) {
        case NodeKind::AtomLeaf: return "ellipse";
        case NodeKind::BottomLeaf: return "ellipse";
        case NodeKind::ImpLeaf: return "hexagon";
        case NodeKind::AndNode: return "box";
        case NodeKind::OrNode: return "diamond";
        case NodeKind::NegNode: return "invtriangle";
    }
    return "ellipse";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const GroundingTree& tree) {
    std::ostringstream out;
    out << "digraph grounding_tree {\n";
    out << "  node [fontname=\"Helvetica\", style=filled];\n";
    for (const GNode& n : tree.nodes()) {
        out << "  n" << n.id << " [label=\"" << dot_escape(n.subformula.printed())
            << "\", shape=" << dot_shape(n.kind)
            << ", fillcolor=\"" << (n.positive() ? "#cfe2f3" : "#f4cccc") << "\"";
        if (n.feeble) out << ", penwidth=3";
        out << "];\n";
    }
    for (const GNode& n : tree.nodes())
        for (NodeId c : n.children) out << "  n" << n.id << " -> n" << c << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace groundkit
