// ============================================================================
// Acceptance suite: one pass/fail line per criterion.
//
//   1  axiom golden suite through the CLI (check + prove, both base variants)
//   2  enumeration == saturation, base calculus, exhaustive small corpus
//   3  enumeration == saturation with amalgamation, capped corpus
//   4  every enumerated ground synthesizes to a checker-valid derivation
//   5  negative controls rejected by both deciders
//   6  variant separation on {p, q} < p | q
//   7  parser round-trip on fuzzed formulas
//   8  desk-scale decidability: 3^8 selection trees through the CLI
//
// Run with no arguments for all criteria, or pass criterion numbers.
// ============================================================================

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "groundkit/bars.hpp"
#include "groundkit/calculus.hpp"
#include "groundkit/oracle.hpp"
#include "groundkit/synthesize.hpp"
#include "test_support.hpp"

using namespace groundkit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr CalculusConfig kBase{false, false};
constexpr CalculusConfig kStar{true, false};
constexpr CalculusConfig kAm{false, true};

struct Criterion {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
    double limit_seconds;  // 0 = no limit
};

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every formula over atoms {p, q} and connectives ~, &, | whose grounding
// tree has at most `max_depth` levels.  Levels share subterms, so the
// corpus is cheap to hold.
std::vector<Formula> exhaustive_corpus(int max_depth) {
    std::vector<std::vector<Formula>> by_depth(static_cast<std::size_t>(max_depth) + 1);
    by_depth[1] = {Formula::make_atom("p"), Formula::make_atom("q")};
    std::vector<Formula> below;  // depth <= d-2 during the loop

    for (int d = 2; d <= max_depth; ++d) {
        std::vector<Formula>& level = by_depth[static_cast<std::size_t>(d)];
        const std::vector<Formula>& previous = by_depth[static_cast<std::size_t>(d) - 1];
        for (const Formula& x : previous) level.push_back(Formula::make_not(x));
        // Binary nodes need at least one child of depth exactly d-1.
        for (const Formula& x : previous)
            for (const Formula& y : previous) {
                level.push_back(Formula::make_and(x, y));
                level.push_back(Formula::make_or(x, y));
            }
        for (const Formula& x : previous)
            for (const Formula& y : below) {
                level.push_back(Formula::make_and(x, y));
                level.push_back(Formula::make_and(y, x));
                level.push_back(Formula::make_or(x, y));
                level.push_back(Formula::make_or(y, x));
            }
        below.insert(below.end(), previous.begin(), previous.end());
    }

    std::vector<Formula> corpus;
    for (const auto& level : by_depth) corpus.insert(corpus.end(), level.begin(), level.end());
    return corpus;
}

std::vector<Formula> implication_sample(int count) {
    gktest::FormulaFuzzer fuzz(0x5eed, true);
    std::vector<Formula> out;
    while (static_cast<int>(out.size()) < count) {
        const Formula f = fuzz.next(4);
        if (GroundingTree::build(f).depth() <= 4) out.push_back(f);
    }
    return out;
}

// ── Criterion 1 ─────────────────────────────────────────────────────────────

Criterion criterion_1() {
    const auto start = Clock::now();
    struct AxiomCase {
        const char* rule;
        const char* claim;
        bool star_rule;
    };
    const AxiomCase cases[] = {
        {"AxAnd", "{p, q} < p & q", false},
        {"AxOrL", "{p} < p | q", false},
        {"AxOrR", "{q} < p | q", false},
        {"AxOrBoth", "{p, q} < p | q", true},
        {"AxNegAndL", "{~p} < ~(p & q)", false},
        {"AxNegAndR", "{~q} < ~(p & q)", false},
        {"AxNegAndBoth", "{~p, ~q} < ~(p & q)", true},
        {"AxNegOr", "{~p, ~q} < ~(p | q)", false},
        {"AxNegNeg", "{p} < ~~p", false},
    };

    int checks_ok = 0, checks_total = 0, proofs_ok = 0, proofs_total = 0;
    for (const bool star : {false, true}) {
        for (const AxiomCase& c : cases) {
            const bool enabled = !c.star_rule || star;
            std::vector<std::string> check_args{"check", c.claim};
            if (star) check_args.push_back("--star");
            const gktest::RunResult checked = gktest::run_cli(check_args);
            ++checks_total;
            if (checked.exit_code == (enabled ? 0 : 1) &&
                checked.out == (enabled ? "yes\n" : "no\n"))
                ++checks_ok;

            if (!enabled) continue;
            std::vector<std::string> prove_args{"prove", c.claim, "--format", "json"};
            if (star) prove_args.push_back("--star");
            const gktest::RunResult proved = gktest::run_cli(prove_args);
            ++proofs_total;
            if (proved.exit_code != 0) continue;
            try {
                const auto doc = nlohmann::json::parse(proved.out);
                const Derivation d = derivation_from_json(doc.at("derivation").dump());
                const CalculusConfig cfg{star, false};
                if (d.node_count() == 1 && rule_name(d.rule) == std::string(c.rule) &&
                    check_derivation(d, cfg).ok &&
                    d.conclusion.collapsed() == parse_claim(c.claim))
                    ++proofs_ok;
            } catch (const std::exception&) {
            }
        }
    }

    std::ostringstream detail;
    detail << checks_ok << "/" << checks_total << " check cases, " << proofs_ok << "/"
           << proofs_total << " one-step proofs";
    const double secs = elapsed(start);
    const bool pass =
        checks_ok == 18 && checks_total == 18 && proofs_ok == proofs_total && proofs_total == 16;
    return {1, "axiom golden suite", pass && secs < 1.0, detail.str(), secs, 1.0};
}

// ── Criteria 2 and 3 ────────────────────────────────────────────────────────

Criterion criterion_2(const std::vector<Formula>& corpus) {
    const auto start = Clock::now();
    std::size_t mismatches = 0, compared = 0;
    std::string first_mismatch;
    for (const Formula& f : corpus) {
        const auto bars_side = enumerate_grounds(f, kBase);
        const auto oracle_side = saturate(f, kBase, 64);
        ++compared;
        if (bars_side != oracle_side) {
            ++mismatches;
            if (first_mismatch.empty()) first_mismatch = f.printed();
        }
    }
    std::ostringstream detail;
    detail << compared << " formulas, " << mismatches << " mismatches";
    if (!first_mismatch.empty()) detail << " (first: " << first_mismatch << ")";
    const double secs = elapsed(start);
    return {2, "base-calculus equivalence, exhaustive corpus", mismatches == 0 && secs <= 300.0,
            detail.str(), secs, 300.0};
}

Criterion criterion_3(const std::vector<Formula>& corpus) {
    const auto start = Clock::now();
    std::size_t mismatches = 0, compared = 0, skipped = 0;
    std::string first_mismatch;
    for (const Formula& f : corpus) {
        if (ClaimUniverse::build(f).elements.size() > kDefaultOracleCap) {
            ++skipped;
            continue;
        }
        for (const bool star : {false, true}) {
            const CalculusConfig cfg{star, true};
            const auto bars_side = enumerate_grounds(f, cfg);
            const auto oracle_side = saturate(f, cfg);
            ++compared;
            if (bars_side != oracle_side) {
                ++mismatches;
                if (first_mismatch.empty()) first_mismatch = f.printed();
            }
        }
    }
    std::ostringstream detail;
    detail << compared << " comparisons (" << skipped << " formulas over the oracle cap), "
           << mismatches << " mismatches";
    if (!first_mismatch.empty()) detail << " (first: " << first_mismatch << ")";
    return {3, "amalgamation equivalence, capped corpus", mismatches == 0, detail.str(),
            elapsed(start), 0.0};
}

// ── Criterion 4 ─────────────────────────────────────────────────────────────

Criterion criterion_4(const std::vector<Formula>& corpus) {
    const auto start = Clock::now();
    std::size_t pairs = 0, failures = 0;
    std::string first_failure;

    const auto run_pairs = [&](const Formula& f, CalculusConfig cfg) {
        const DerivationSynthesizer synth(f, cfg);
        for (const FormulaSet& ground : enumerate_grounds(f, cfg)) {
            ++pairs;
            bool ok = false;
            try {
                const Derivation d = synth.derive(ground);
                ok = check_derivation(d, cfg).ok &&
                     d.conclusion.collapsed() == GroundingClaim{ground, f};
            } catch (const std::exception&) {
            }
            if (!ok) {
                ++failures;
                if (first_failure.empty())
                    first_failure = GroundingClaim{ground, f}.to_string();
            }
        }
    };

    for (const Formula& f : corpus) run_pairs(f, kBase);
    for (const Formula& f : corpus) {
        if (ClaimUniverse::build(f).elements.size() > kDefaultOracleCap) continue;
        run_pairs(f, kAm);
        run_pairs(f, CalculusConfig{true, true});
    }

    std::ostringstream detail;
    detail << pairs << " (formula, ground) pairs, " << failures << " failures";
    if (!first_failure.empty()) detail << " (first: " << first_failure << ")";
    return {4, "synthesized derivations all check", pairs >= 1000 && failures == 0,
            detail.str(), elapsed(start), 0.0};
}

// ── Criteria 5 and 6 ────────────────────────────────────────────────────────

Criterion criterion_5() {
    const auto start = Clock::now();
    const char* controls[] = {
        "{~p} < ~(p | q)",
        "{p} < ~p",
        "{p & q} < p & q",
        "{p, q} < p | q",
    };
    int rejections = 0;
    for (const char* text : controls) {
        const GroundingClaim claim = parse_claim(text);
        const auto oracle_side = saturate(claim.target, kBase);
        const bool oracle_has = std::find(oracle_side.begin(), oracle_side.end(),
                                          claim.ground) != oracle_side.end();
        if (!is_ground(claim, kBase) && !oracle_has) ++rejections;
    }
    std::ostringstream detail;
    detail << rejections << "/4 rejected by both deciders";
    return {5, "negative controls", rejections == 4, detail.str(), elapsed(start), 0.0};
}

Criterion criterion_6() {
    const auto start = Clock::now();
    const GroundingClaim claim = parse_claim("{p, q} < p | q");
    int expected = 0;
    const auto oracle_accepts = [&](CalculusConfig cfg) {
        const auto grounds = saturate(claim.target, cfg);
        return std::find(grounds.begin(), grounds.end(), claim.ground) != grounds.end();
    };
    if (!is_ground(claim, kBase) && !oracle_accepts(kBase)) ++expected;
    if (is_ground(claim, kStar) && oracle_accepts(kStar)) ++expected;
    if (is_ground(claim, kAm) && oracle_accepts(kAm)) ++expected;
    std::ostringstream detail;
    detail << expected << "/3 expected answers";
    return {6, "variant separation (* and Am)", expected == 3, detail.str(), elapsed(start), 0.0};
}

// ── Criterion 7 ─────────────────────────────────────────────────────────────

Criterion criterion_7() {
    const auto start = Clock::now();
    gktest::FormulaFuzzer fuzz(0xf00d, true);
    std::size_t failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const Formula f = fuzz.next(1 + i % 9);
        if (parse_formula(print(f)) != f) ++failures;
    }
    std::ostringstream detail;
    detail << "10000 formulas, " << failures << " round-trip failures";
    const double secs = elapsed(start);
    return {7, "parser round-trip", failures == 0 && secs < 10.0, detail.str(), secs, 10.0};
}

// ── Criterion 8 ─────────────────────────────────────────────────────────────

Criterion criterion_8() {
    const auto start = Clock::now();
    std::string text = "(p | q)";
    for (int i = 1; i < 8; ++i) text += " & (p | q)";
    const Formula f = parse_formula(text);

    const GroundingTree tree = GroundingTree::build(f);
    std::size_t feeble = 0;
    for (const GNode& n : tree.nodes())
        if (n.feeble) ++feeble;
    const std::size_t trees = selection_trees(tree, true).size();

    // Independent expectation from rule saturation, rendered the way the
    // CLI renders ground listings.
    std::string expected;
    for (const FormulaSet& s : saturate(f, kStar, 32)) expected += s.to_string() + "\n";

    const gktest::RunResult run = gktest::run_cli({"grounds", text, "--star"});
    const double secs = elapsed(start);

    std::ostringstream detail;
    detail << feeble << " feeble nodes, " << trees << " selection trees, "
           << (run.out == expected ? "output matches saturation" : "OUTPUT MISMATCH");
    const bool pass =
        feeble == 8 && trees == 6561 && run.exit_code == 0 && run.out == expected && secs < 30.0;
    return {8, "desk-scale decidability through the CLI", pass, detail.str(), secs, 30.0};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    const auto selected = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

    std::vector<Formula> corpus;
    if (selected(2) || selected(3) || selected(4)) {
        corpus = exhaustive_corpus(4);
        const std::vector<Formula> sample = implication_sample(200);
        corpus.insert(corpus.end(), sample.begin(), sample.end());
        std::printf("corpus: %zu exhaustive + 200 sampled formulas\n", corpus.size() - 200);
    }

    std::vector<Criterion> results;
    if (selected(1)) results.push_back(criterion_1());
    if (selected(2)) results.push_back(criterion_2(corpus));
    if (selected(3)) results.push_back(criterion_3(corpus));
    if (selected(4)) results.push_back(criterion_4(corpus));
    if (selected(5)) results.push_back(criterion_5());
    if (selected(6)) results.push_back(criterion_6());
    if (selected(7)) results.push_back(criterion_7());
    if (selected(8)) results.push_back(criterion_8());

    bool all_pass = true;
    for (const Criterion& c : results) {
        all_pass = all_pass && c.pass;
        std::printf("criterion %d (%s): %s: %s, %.2f s", c.id, c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str(), c.seconds);
        if (c.limit_seconds > 0) std::printf(" (limit %.0f s)", c.limit_seconds);
        std::printf("\n");
    }
    std::printf("acceptance: %zu/%zu criteria passed\n",
                static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                       [](const Criterion& c) { return c.pass; })),
                results.size());
    return all_pass ? 0 : 1;
}
