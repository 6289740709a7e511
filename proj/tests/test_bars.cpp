#include "doctest.h"

#include <algorithm>
#include <set>

#include "groundkit/bars.hpp"
#include "groundkit/errors.hpp"
#include "test_support.hpp"

using namespace groundkit;
using gktest::F;
using gktest::S;
using gktest::SS;

namespace {

constexpr CalculusConfig kBase{false, false};
constexpr CalculusConfig kStar{true, false};
constexpr CalculusConfig kAm{false, true};
constexpr CalculusConfig kFull{true, true};

std::vector<std::vector<NodeId>> root_to_leaf_paths(const SelectionTree& s) {
    std::vector<std::vector<NodeId>> paths;
    std::vector<NodeId> current;
    const auto walk = [&](auto&& self, NodeId id) -> void {
        current.push_back(id);
        const auto children = s.surviving_children(id);
        if (children.empty()) paths.push_back(current);
        for (NodeId c : children) self(self, c);
        current.pop_back();
    };
    walk(walk, s.base().root());
    return paths;
}

}  // namespace

TEST_CASE("selection trees multiply over independent feeble nodes") {
    const GroundingTree conj = GroundingTree::build(F("p & q"));
    CHECK(selection_trees(conj, false).size() == 1);
    CHECK(selection_trees(conj, true).size() == 1);

    const GroundingTree disj = GroundingTree::build(F("p | q"));
    CHECK(selection_trees(disj, false).size() == 2);
    CHECK(selection_trees(disj, true).size() == 3);

    // Two independent disjunctions: 2*2 and 3*3.
    const GroundingTree two = GroundingTree::build(F("(p | q) & (p | q)"));
    CHECK(selection_trees(two, false).size() == 4);
    CHECK(selection_trees(two, true).size() == 9);

    // A feeble node inside a deleted subtree contributes no factor.
    const GroundingTree nested = GroundingTree::build(F("(p | q) | r"));
    CHECK(selection_trees(nested, false).size() == 3);
    CHECK(selection_trees(nested, true).size() == 7);
}

TEST_CASE("every deleted subtree is rooted at a child of a feeble node") {
    gktest::FormulaFuzzer fuzz(11, false);
    for (int i = 0; i < 100; ++i) {
        const GroundingTree t = GroundingTree::build(fuzz.next(5));
        for (bool star : {false, true})
            for (const SelectionTree& s : selection_trees(t, star))
                for (NodeId d : s.deleted()) {
                    const GNode& parent = t.node(t.node(d).parent);
                    CHECK(parent.feeble);
                    CHECK(std::find(parent.children.begin(), parent.children.end(), d) !=
                          parent.children.end());
                }
    }
}

TEST_CASE("bars of small selection trees") {
    // ~p has no admissible bars: {p} would reproduce the formula itself.
    const GroundingTree neg = GroundingTree::build(F("~p"));
    const auto neg_trees = selection_trees(neg, false);
    REQUIRE(neg_trees.size() == 1);
    CHECK(bars_of(neg_trees[0]).empty());

    // p & q has exactly the leaf bar.
    const GroundingTree conj = GroundingTree::build(F("p & q"));
    const auto conj_bars = bars_of(selection_trees(conj, false)[0]);
    REQUIRE(conj_bars.size() == 1);
    CHECK(conj_bars[0].prefixed_ground(conj) == S({"p", "q"}));

    // (p | q) & r, keeping p: cut at the disjunction node or at its leaf.
    const GroundingTree mixed = GroundingTree::build(F("(p | q) & r"));
    const auto trees = selection_trees(mixed, false);
    REQUIRE(trees.size() == 2);
    const auto bars = bars_of(trees[0]);  // first choice keeps the left child
    REQUIRE(bars.size() == 2);
    std::set<FormulaSet> grounds;
    for (const Bar& b : bars) grounds.insert(b.prefixed_ground(mixed));
    CHECK(grounds == std::set<FormulaSet>{S({"p | q", "r"}), S({"p", "r"})});

    // A lone leaf has no non-trivial bars.
    const GroundingTree leaf = GroundingTree::build(F("p"));
    CHECK(bars_of(selection_trees(leaf, false)[0]).empty());
}

TEST_CASE("bars cut every root-to-leaf path exactly once") {
    gktest::FormulaFuzzer fuzz(12, true);
    for (int i = 0; i < 150; ++i) {
        const GroundingTree t = GroundingTree::build(fuzz.next(5));
        for (bool star : {false, true})
            for (const SelectionTree& s : selection_trees(t, star))
                for (const Bar& bar : bars_of(s))
                    for (const auto& path : root_to_leaf_paths(s)) {
                        int hits = 0;
                        for (NodeId n : path)
                            if (std::binary_search(bar.nodes.begin(), bar.nodes.end(), n)) ++hits;
                        CHECK(hits == 1);
                    }
    }
}

TEST_CASE("grounding bars match the axiom shapes") {
    CHECK(grounding_bars(F("~(p | q)"), false) == SS({{"~p", "~q"}}));
    CHECK(grounding_bars(F("~(p & q)"), false) == SS({{"~p"}, {"~q"}}));
    CHECK(grounding_bars(F("~(p & q)"), true) == SS({{"~p"}, {"~q"}, {"~p", "~q"}}));
    CHECK(grounding_bars(F("~~p"), false) == SS({{"p"}}));
    CHECK(grounding_bars(F("~p"), false).empty());
    CHECK(grounding_bars(F("p -> q"), false).empty());
}

TEST_CASE("ground enumeration per variant") {
    CHECK(enumerate_grounds(F("p | q"), kBase) == SS({{"p"}, {"q"}}));
    CHECK(enumerate_grounds(F("p | q"), kAm) == SS({{"p"}, {"q"}, {"p", "q"}}));
    CHECK(enumerate_grounds(F("p | q"), kStar) == SS({{"p"}, {"q"}, {"p", "q"}}));
    for (const CalculusConfig cfg : all_configs())
        CHECK(enumerate_grounds(F("p & q"), cfg) == SS({{"p", "q"}}));

    CHECK(enumerate_grounds(F("(p | q) & r"), kBase) ==
          SS({{"p", "r"}, {"q", "r"}, {"p | q", "r"}}));

    // Repeated subformulas: bars may keep one occurrence whole while the
    // other is decomposed.
    CHECK(enumerate_grounds(F("(p | q) & (p | q)"), kBase) ==
          SS({{"p | q"}, {"p"}, {"q"}, {"p", "q"}, {"p", "p | q"}, {"q", "p | q"}}));
}

TEST_CASE("the union closure reports a cap breach without partial output") {
    CHECK_THROWS_AS(enumerate_grounds(F("p | q"), kAm, 2), ResourceError);
    CHECK_NOTHROW(enumerate_grounds(F("p | q"), kAm, 3));
}

TEST_CASE("claim decisions follow the characterisation") {
    for (const CalculusConfig cfg : all_configs()) {
        CAPTURE(cfg.to_string());
        CHECK_FALSE(is_ground(parse_claim("{~p} < ~(p | q)"), cfg));
        CHECK(is_ground(parse_claim("{p | q, r} < (p | q) & r"), cfg));
        CHECK(is_ground(parse_claim("{~p, ~q} < ~(p | q)"), cfg));
        CHECK_FALSE(is_ground(parse_claim("{p} < ~p"), cfg));
    }
    CHECK_FALSE(is_ground(parse_claim("{p, q} < p | q"), kBase));
    CHECK(is_ground(parse_claim("{p, q} < p | q"), kStar));
    CHECK(is_ground(parse_claim("{p, q} < p | q"), kAm));
    CHECK(is_ground(parse_claim("{p, q} < p | q"), kFull));

    // Am unions must be exact: a stray element fails the maximal-union test.
    CHECK_FALSE(is_ground(parse_claim("{p, q, r} < p | q"), kFull));
    CHECK_FALSE(is_ground(parse_claim("{p, p | q, r} < (p | q) & r"), kBase));
    CHECK(is_ground(parse_claim("{p, p | q, r} < (p | q) & r"), kAm));
}

TEST_CASE("grounding is never reflexive") {
    gktest::FormulaFuzzer fuzz(13, true);
    for (int i = 0; i < 200; ++i) {
        const Formula f = fuzz.next(5);
        if (!gktest::closure_pool_small(f, true)) continue;
        for (const CalculusConfig cfg : all_configs()) {
            const auto grounds = enumerate_grounds(f, cfg);
            const FormulaSet self(std::vector<Formula>{f});
            CHECK(std::find(grounds.begin(), grounds.end(), self) == grounds.end());
            CHECK_FALSE(is_ground(GroundingClaim{self, f}, cfg));
        }
    }
}

TEST_CASE("the base variant's grounds are included in every other variant") {
    gktest::FormulaFuzzer fuzz(14, false);
    for (int i = 0; i < 120; ++i) {
        const Formula f = fuzz.next(5);
        if (!gktest::closure_pool_small(f, true)) continue;
        const auto base = enumerate_grounds(f, kBase);
        for (const CalculusConfig cfg : {kStar, kAm, kFull}) {
            const auto other = enumerate_grounds(f, cfg);
            for (const FormulaSet& g : base)
                CHECK(std::find(other.begin(), other.end(), g) != other.end());
        }
    }
}

TEST_CASE("the maximal-union test agrees with the explicit closure") {
    gktest::FormulaFuzzer fuzz(15, false);
    for (int i = 0; i < 60; ++i) {
        const Formula f = fuzz.next(4);
        for (const CalculusConfig cfg : {kAm, kFull}) {
            // Candidate pool: every element of every bar.
            FormulaSet pool;
            for (const FormulaSet& bar : grounding_bars(f, cfg.star))
                pool = pool.united_with(bar);
            if (pool.size() > 10) continue;

            const auto closure = enumerate_grounds(f, cfg);
            const std::set<FormulaSet> closure_set(closure.begin(), closure.end());

            const std::size_t n = pool.size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                std::vector<Formula> items;
                for (std::size_t b = 0; b < n; ++b)
                    if (mask & (std::size_t{1} << b)) items.push_back(pool.items()[b]);
                const FormulaSet candidate(std::move(items));
                CHECK(is_ground(GroundingClaim{candidate, f}, cfg) ==
                      (closure_set.count(candidate) > 0));
            }
        }
    }
}
