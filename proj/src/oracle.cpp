#include "groundkit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "groundkit/errors.hpp"

namespace groundkit {

namespace {

enum class GShape : unsigned char { AndS, OrS, NegAnd, NegOr, NegNeg, Opaque };

struct Decomp {
    GShape shape = GShape::Opaque;
    // Immediate grounding parts: {a, b} for a & b and a | b, {~a, ~b} for
    // ~(a & b) and ~(a | b), {a} for ~~a.
    std::vector<Formula> parts;
};

Decomp decompose(const Formula& f) {
    if (f.is_negation()) {
        const Formula body = f.negation_body();
        if (body.is_negation()) return {GShape::NegNeg, {body.negation_body()}};
        if (body.kind() == Kind::And)
            return {GShape::NegAnd,
                    {Formula::make_not(body.left()), Formula::make_not(body.right())}};
        if (body.kind() == Kind::Or)
            return {GShape::NegOr,
                    {Formula::make_not(body.left()), Formula::make_not(body.right())}};
        return {GShape::Opaque, {}};
    }
    if (f.kind() == Kind::And) return {GShape::AndS, {f.left(), f.right()}};
    if (f.kind() == Kind::Or) return {GShape::OrS, {f.left(), f.right()}};
    return {GShape::Opaque, {}};
}

}  // namespace

ClaimUniverse ClaimUniverse::build(const Formula& f) {
    ClaimUniverse u{f, {}, {}};

    // Premise-target closure, children first so every rule for a target only
    // consumes already-saturated claims.
    std::unordered_set<std::string> seen;
    std::function<void(const Formula&)> visit = [&](const Formula& t) {
        if (!seen.insert(t.printed()).second) return;
        for (const Formula& child : decompose(t).parts) visit(child);
        u.targets.push_back(t);
    };
    visit(f);

    std::vector<Formula> elems;
    for (const Formula& g : subformulas(f)) {
        elems.push_back(g);
        elems.push_back(Formula::make_not(g));
    }
    FormulaSet canonical(std::move(elems));
    u.elements.assign(canonical.begin(), canonical.end());
    return u;
}

// ── Saturation ──────────────────────────────────────────────────────────────

namespace {

using ElemId = std::uint16_t;
using Mset = std::vector<ElemId>;  // sorted element ids, repeats allowed

struct MsetHash {
    std::size_t operator()(const Mset& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (ElemId e : m) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

void add_sorted(Mset& m, ElemId e) {
    m.insert(std::upper_bound(m.begin(), m.end(), e), e);
}

Mset dedup(const Mset& m) {
    Mset out = m;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct ElimVariant {
    RuleId rule;
    std::vector<ElemId> replacement;
    bool star;
};

class Saturator {
public:
    Saturator(const ClaimUniverse& universe, CalculusConfig cfg, bool transcript)
        : universe_(universe), cfg_(cfg), with_transcript_(transcript) {
        for (std::size_t i = 0; i < universe.elements.size(); ++i)
            element_id_[universe.elements[i]] = static_cast<ElemId>(i);
        for (std::size_t i = 0; i < universe.targets.size(); ++i)
            target_id_[universe.targets[i]] = i;
        build_elim_table();
        states_.resize(universe.targets.size());
    }

    SaturationOutput run() {
        for (std::size_t t = 0; t < universe_.targets.size(); ++t) saturate_target(t);

        const std::size_t f_idx = target_id_.at(universe_.target);
        std::set<FormulaSet> grounds;
        std::map<FormulaSet, std::size_t> representative;
        const TargetState& state = states_[f_idx];
        for (std::size_t i = 0; i < state.claims.size(); ++i) {
            FormulaSet s = to_set(state.claims[i]);
            if (grounds.insert(s).second && with_transcript_)
                representative.emplace(std::move(s), state.entry_idx[i]);
        }

        if (cfg_.am) close_under_union(f_idx, grounds, representative);

        SaturationOutput out;
        out.grounds.assign(grounds.begin(), grounds.end());
        std::stable_sort(out.grounds.begin(), out.grounds.end(),
                         [](const FormulaSet& a, const FormulaSet& b) {
                             if (a.size() != b.size()) return a.size() < b.size();
                             return a < b;
                         });
        out.transcript = std::move(transcript_);
        return out;
    }

private:
    struct TargetState {
        std::vector<Mset> claims;  // discovery order
        std::unordered_set<Mset, MsetHash> seen;
        std::vector<std::size_t> entry_idx;  // transcript record per claim
    };

    ElemId element_of(const Formula& f) const {
        auto it = element_id_.find(f);
        if (it == element_id_.end())
            throw std::logic_error("oracle universe closure violated at '" + f.printed() + "'");
        return it->second;
    }

    void build_elim_table() {
        elim_table_.resize(universe_.elements.size());
        for (std::size_t i = 0; i < universe_.elements.size(); ++i) {
            const Decomp d = decompose(universe_.elements[i]);
            auto& variants = elim_table_[i];
            const auto id = [&](const Formula& g) { return element_of(g); };
            switch (d.shape) {
                case GShape::AndS:
                    variants.push_back({RuleId::ElimAnd, {id(d.parts[0]), id(d.parts[1])}, false});
                    break;
                case GShape::OrS:
                    variants.push_back({RuleId::ElimOrL, {id(d.parts[0])}, false});
                    variants.push_back({RuleId::ElimOrR, {id(d.parts[1])}, false});
                    variants.push_back({RuleId::ElimOrBoth, {id(d.parts[0]), id(d.parts[1])}, true});
                    break;
                case GShape::NegAnd:
                    variants.push_back({RuleId::ElimNegAndL, {id(d.parts[0])}, false});
                    variants.push_back({RuleId::ElimNegAndR, {id(d.parts[1])}, false});
                    variants.push_back(
                        {RuleId::ElimNegAndBoth, {id(d.parts[0]), id(d.parts[1])}, true});
                    break;
                case GShape::NegOr:
                    variants.push_back({RuleId::ElimNegOr, {id(d.parts[0]), id(d.parts[1])}, false});
                    break;
                case GShape::NegNeg:
                    variants.push_back({RuleId::ElimNegNeg, {id(d.parts[0])}, false});
                    break;
                case GShape::Opaque:
                    break;
            }
        }
    }

    bool insert(std::size_t t, Mset m, RuleId rule, std::vector<std::size_t> premise_entries) {
        TargetState& state = states_[t];
        if (!state.seen.insert(m).second) return false;
        if (++total_claims_ > kRunawayGuard)
            throw std::logic_error("oracle saturation runaway");
        std::size_t entry = 0;
        if (with_transcript_) {
            entry = transcript_.size();
            transcript_.push_back(
                {Sequent{to_bag(m), universe_.targets[t]}, rule, std::move(premise_entries)});
        }
        state.claims.push_back(std::move(m));
        state.entry_idx.push_back(entry);
        return true;
    }

    void saturate_target(std::size_t t) {
        const Formula& target = universe_.targets[t];
        const Decomp d = decompose(target);

        seed_axioms(t, d);
        apply_intros(t, d);

        // Eliminations and {}c only rewrite grounds of the same target, so a
        // single growing pass reaches the fixed point.
        TargetState& state = states_[t];
        for (std::size_t i = 0; i < state.claims.size(); ++i) {
            const Mset m = state.claims[i];  // copy: the vector may grow
            const std::size_t entry = state.entry_idx[i];

            Mset d_m = dedup(m);
            if (d_m != m) insert(t, std::move(d_m), RuleId::SetC, {entry});

            for (std::size_t k = 0; k < m.size(); ++k) {
                if (k > 0 && m[k] == m[k - 1]) continue;  // same element, same rewrites
                for (const ElimVariant& v : elim_table_[m[k]]) {
                    if (v.star && !cfg_.star) continue;
                    Mset next;
                    next.reserve(m.size() - 1 + v.replacement.size());
                    next.assign(m.begin(), m.end());
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
                    for (ElemId r : v.replacement) add_sorted(next, r);
                    insert(t, std::move(next), v.rule, {entry});
                }
            }
        }
    }

    void seed_axioms(std::size_t t, const Decomp& d) {
        const auto ids = [&](std::initializer_list<std::size_t> picks) {
            Mset m;
            for (std::size_t p : picks) m.push_back(element_of(d.parts[p]));
            std::sort(m.begin(), m.end());
            return m;
        };
        switch (d.shape) {
            case GShape::AndS:
                insert(t, ids({0, 1}), RuleId::AxAnd, {});
                break;
            case GShape::OrS:
                insert(t, ids({0}), RuleId::AxOrL, {});
                insert(t, ids({1}), RuleId::AxOrR, {});
                if (cfg_.star) insert(t, ids({0, 1}), RuleId::AxOrBoth, {});
                break;
            case GShape::NegAnd:
                insert(t, ids({0}), RuleId::AxNegAndL, {});
                insert(t, ids({1}), RuleId::AxNegAndR, {});
                if (cfg_.star) insert(t, ids({0, 1}), RuleId::AxNegAndBoth, {});
                break;
            case GShape::NegOr:
                insert(t, ids({0, 1}), RuleId::AxNegOr, {});
                break;
            case GShape::NegNeg:
                insert(t, ids({0}), RuleId::AxNegNeg, {});
                break;
            case GShape::Opaque:
                break;
        }
    }

    void apply_intros(std::size_t t, const Decomp& d) {
        const auto child_state = [&](std::size_t p) -> const TargetState& {
            return states_[target_id_.at(d.parts[p])];
        };
        const auto lift_one = [&](std::size_t p, RuleId rule) {
            const TargetState& from = child_state(p);
            for (std::size_t i = 0; i < from.claims.size(); ++i)
                insert(t, from.claims[i], rule, {from.entry_idx[i]});
        };
        const auto lift_pairs = [&](RuleId rule) {
            const TargetState& l = child_state(0);
            const TargetState& r = child_state(1);
            for (std::size_t i = 0; i < l.claims.size(); ++i)
                for (std::size_t j = 0; j < r.claims.size(); ++j) {
                    Mset merged;
                    merged.reserve(l.claims[i].size() + r.claims[j].size());
                    std::merge(l.claims[i].begin(), l.claims[i].end(), r.claims[j].begin(),
                               r.claims[j].end(), std::back_inserter(merged));
                    insert(t, std::move(merged), rule, {l.entry_idx[i], r.entry_idx[j]});
                }
        };
        switch (d.shape) {
            case GShape::AndS:
                lift_pairs(RuleId::IntroAnd);
                break;
            case GShape::OrS:
                lift_one(0, RuleId::IntroOrL);
                lift_one(1, RuleId::IntroOrR);
                if (cfg_.star) lift_pairs(RuleId::IntroOrBoth);
                break;
            case GShape::NegAnd:
                lift_one(0, RuleId::IntroNegAndL);
                lift_one(1, RuleId::IntroNegAndR);
                if (cfg_.star) lift_pairs(RuleId::IntroNegAndBoth);
                break;
            case GShape::NegOr:
                lift_pairs(RuleId::IntroNegOr);
                break;
            case GShape::NegNeg:
                lift_one(0, RuleId::IntroNegNeg);
                break;
            case GShape::Opaque:
                break;
        }
    }

    // With Am, a merged ground collapses to the union of the premise
    // grounds, so the derivable sets are the pairwise-union closure of the
    // Am-free ones.
    void close_under_union(std::size_t f_idx, std::set<FormulaSet>& grounds,
                           std::map<FormulaSet, std::size_t>& representative) {
        const std::vector<FormulaSet> base(grounds.begin(), grounds.end());
        std::vector<FormulaSet> worklist(grounds.begin(), grounds.end());
        while (!worklist.empty()) {
            FormulaSet current = std::move(worklist.back());
            worklist.pop_back();
            for (const FormulaSet& b : base) {
                FormulaSet merged = current.united_with(b);
                if (!grounds.insert(merged).second) continue;
                if (with_transcript_) {
                    const std::size_t li = representative.at(current);
                    const std::size_t ri = representative.at(b);
                    FormulaBag sum = transcript_[li].claim.ground.summed_with(
                        transcript_[ri].claim.ground);
                    transcript_.push_back(
                        {Sequent{sum, universe_.targets[f_idx]}, RuleId::Am, {li, ri}});
                    std::size_t idx = transcript_.size() - 1;
                    if (sum.has_duplicates()) {
                        transcript_.push_back({Sequent{FormulaBag(merged.items()),
                                                       universe_.targets[f_idx]},
                                               RuleId::SetC,
                                               {idx}});
                        idx = transcript_.size() - 1;
                    }
                    representative.emplace(merged, idx);
                }
                worklist.push_back(std::move(merged));
            }
        }
    }

    FormulaSet to_set(const Mset& m) const {
        std::vector<Formula> items;
        items.reserve(m.size());
        for (ElemId e : m) items.push_back(universe_.elements[e]);
        return FormulaSet(std::move(items));
    }

    FormulaBag to_bag(const Mset& m) const {
        std::vector<Formula> items;
        items.reserve(m.size());
        for (ElemId e : m) items.push_back(universe_.elements[e]);
        return FormulaBag(std::move(items));
    }

    static constexpr std::size_t kRunawayGuard = 50'000'000;

    const ClaimUniverse& universe_;
    CalculusConfig cfg_;
    bool with_transcript_;
    std::unordered_map<Formula, ElemId, FormulaHash> element_id_;
    std::unordered_map<Formula, std::size_t, FormulaHash> target_id_;
    std::vector<std::vector<ElimVariant>> elim_table_;
    std::vector<TargetState> states_;
    std::vector<TranscriptEntry> transcript_;
    std::size_t total_claims_ = 0;
};

SaturationOutput run_saturation(const Formula& f, CalculusConfig cfg, std::size_t cap,
                                bool transcript) {
    const ClaimUniverse universe = ClaimUniverse::build(f);
    // Element ids are 16 bits; even a raised cap must respect that.
    if (universe.elements.size() > std::min<std::size_t>(cap, 0xffff))
        throw ResourceError("oracle universe for '" + f.printed() + "' has " +
                            std::to_string(universe.elements.size()) +
                            " elements, cap is " + std::to_string(cap));
    return Saturator(universe, cfg, transcript).run();
}

}  // namespace

std::vector<FormulaSet> saturate(const Formula& f, CalculusConfig cfg, std::size_t cap) {
    return run_saturation(f, cfg, cap, false).grounds;
}

SaturationOutput saturate_with_transcript(const Formula& f, CalculusConfig cfg,
                                          std::size_t cap) {
    return run_saturation(f, cfg, cap, true);
}

std::string transcript_to_json(const std::vector<TranscriptEntry>& transcript, int indent) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const TranscriptEntry& e : transcript) {
        nlohmann::ordered_json j;
        j["rule"] = rule_name(e.rule);
        j["conclusion"] = e.claim.to_string();
        j["premises"] = e.premises;
        records.push_back(std::move(j));
    }
    return records.dump(indent);
}

}  // namespace groundkit
