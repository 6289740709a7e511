// ============================================================================
// groundkit/formula.hpp — Propositional syntax for grounding claims
// ============================================================================
//
// The object language has atoms, bottom, conjunction, disjunction and
// implication.  Negation is not a constructor: the surface form `~x`
// desugars to `x -> _|_` at parse time and every component recognizes that
// shape structurally.  This keeps one representation for formulas such as
// ~(p & q) regardless of how they were written.
//
// Concrete grammar (whitespace insensitive):
//
//   atom    := [a-z][a-zA-Z0-9_]*
//   bottom  := "_|_"
//   primary := atom | bottom | "(" formula ")"
//   unary   := "~" unary | primary
//   conj    := unary ("&" unary)*            left associative
//   disj    := conj ("|" conj)*              left associative
//   formula := disj ("->" formula)?          right associative
//   claim   := "{" formula ("," formula)* "}" "<" formula
//
// Formula values are immutable and share structure; copying is cheap and
// sharing across threads needs no coordination.
//
// ============================================================================

#ifndef GROUNDKIT_FORMULA_HPP
#define GROUNDKIT_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "groundkit/errors.hpp"

namespace groundkit {

enum class Kind : unsigned char { Atom, Bottom, And, Or, Imp };

class Formula {
public:
    static Formula make_atom(std::string name);
    static Formula make_bottom();
    static Formula make_and(Formula left, Formula right);
    static Formula make_or(Formula left, Formula right);
    static Formula make_imp(Formula left, Formula right);
    // Sugar: ~f is imp(f, bottom).
    static Formula make_not(Formula f);

    Kind kind() const noexcept;
    const std::string& atom_name() const;  // Atom only
    Formula left() const;                  // And/Or/Imp only
    Formula right() const;                 // And/Or/Imp only

    // True when the formula has the shape x -> _|_.
    bool is_negation() const noexcept;
    // The x of x -> _|_.  Precondition: is_negation().
    Formula negation_body() const;

    // Minimal-parentheses rendering; negation shapes print as ~x.
    const std::string& printed() const noexcept;

    // Structural equality.  printed() is injective, so the printed form
    // doubles as the canonical total order used for ground sets.
    bool operator==(const Formula& o) const noexcept;
    bool operator!=(const Formula& o) const noexcept { return !(*this == o); }
    bool operator<(const Formula& o) const noexcept { return printed() < o.printed(); }

    std::size_t hash() const noexcept;

    struct Node;  // definition private to the implementation

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

std::string print(const Formula& f);

// All subterms of f, including f itself, first-occurrence order with
// children before parents.  The _|_ introduced by ~ sugar is included.
std::vector<Formula> subformulas(const Formula& f);

Formula parse_formula(std::string_view text);

// ── Canonical collections ───────────────────────────────────────────────────
// Both keep their elements sorted by printed form.  FormulaSet deduplicates;
// FormulaBag keeps multiplicities (grounds inside derivations behave as
// lists up to the {}c rule, which only ever removes duplicates).

class FormulaSet {
public:
    FormulaSet() = default;
    explicit FormulaSet(std::vector<Formula> items);

    void insert(const Formula& f);
    bool contains(const Formula& f) const;
    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }

    const std::vector<Formula>& items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    FormulaSet united_with(const FormulaSet& o) const;
    bool subset_of(const FormulaSet& o) const;

    // "{a, b, c}"
    std::string to_string() const;

    bool operator==(const FormulaSet& o) const noexcept;
    bool operator!=(const FormulaSet& o) const noexcept { return !(*this == o); }
    bool operator<(const FormulaSet& o) const noexcept;

private:
    std::vector<Formula> items_;  // sorted by printed form, unique
};

class FormulaBag {
public:
    FormulaBag() = default;
    explicit FormulaBag(std::vector<Formula> items);

    void add(const Formula& f);
    // Removes one occurrence; returns false when absent.
    bool remove_one(const Formula& f);
    std::size_t count(const Formula& f) const;
    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    const Formula& at(std::size_t i) const { return items_.at(i); }

    const std::vector<Formula>& items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    FormulaBag summed_with(const FormulaBag& o) const;  // multiset sum
    FormulaSet collapsed() const;                       // {}c applied
    bool has_duplicates() const;

    std::string to_string() const;

    bool operator==(const FormulaBag& o) const noexcept;
    bool operator!=(const FormulaBag& o) const noexcept { return !(*this == o); }

private:
    std::vector<Formula> items_;  // sorted by printed form, repeats allowed
};

// ── Grounding claims ────────────────────────────────────────────────────────
// {a1, ..., an} < target with the ground kept canonical: deduplicated and
// sorted, so the {}c structural rule is absorbed by representation.

struct GroundingClaim {
    FormulaSet ground;
    Formula target;

    std::string to_string() const;

    bool operator==(const GroundingClaim& o) const noexcept {
        return target == o.target && ground == o.ground;
    }
    bool operator!=(const GroundingClaim& o) const noexcept { return !(*this == o); }
};

// Parses "{f1, ..., fn} < g", n >= 1, canonicalizing the ground.
GroundingClaim parse_claim(std::string_view text);

// Same grammar, but the listed ground formulas are returned verbatim
// (duplicates preserved).  Derivation conclusions need the multiplicities.
struct RawClaim {
    std::vector<Formula> ground_items;
    Formula target;
};
RawClaim parse_claim_raw(std::string_view text);

}  // namespace groundkit

#endif  // GROUNDKIT_FORMULA_HPP
