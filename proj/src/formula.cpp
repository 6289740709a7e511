#include "groundkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>
#include <utility>

namespace groundkit {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
        out += expected[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : std::runtime_error("parse error at byte " + std::to_string(offset) +
                         (detail.empty() ? "" : ": " + detail) +
                         (expected.empty() ? "" : ": expected " + join_expected(expected))),
      offset_(offset),
      expected_(std::move(expected)) {}

// ── Formula nodes ───────────────────────────────────────────────────────────
// The printed form and the precedence level of the outermost operator are
// fixed at construction, so rendering and ordering are O(1) afterwards.
// Levels: -> is 1, | is 2, & is 3, everything atomic-looking (atoms, _|_,
// and ~x shapes) is 4.

struct Formula::Node {
    Kind kind;
    std::string name;  // atoms only
    std::shared_ptr<const Node> left, right;
    std::string printed;
    int level = 4;
    std::size_t hash = 0;
};

namespace {

const std::string& wrap(const std::shared_ptr<const Formula::Node>& n, int min_level,
                        std::string& scratch) {
    if (n->level >= min_level) return n->printed;
    scratch = "(" + n->printed + ")";
    return scratch;
}

std::shared_ptr<const Formula::Node> finish(Formula::Node node) {
    node.hash = std::hash<std::string>{}(node.printed);
    return std::make_shared<const Formula::Node>(std::move(node));
}

bool valid_atom_name(const std::string& name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

Formula Formula::make_atom(std::string name) {
    if (!valid_atom_name(name))
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    Node n;
    n.kind = Kind::Atom;
    n.printed = name;
    n.name = std::move(name);
    return Formula(finish(std::move(n)));
}

Formula Formula::make_bottom() {
    Node n;
    n.kind = Kind::Bottom;
    n.printed = "_|_";
    return Formula(finish(std::move(n)));
}

Formula Formula::make_and(Formula left, Formula right) {
    Node n;
    n.kind = Kind::And;
    std::string s;
    n.printed = wrap(left.node_, 3, s) + " & ";
    n.printed += wrap(right.node_, 4, s);
    n.level = 3;
    n.left = std::move(left.node_);
    n.right = std::move(right.node_);
    return Formula(finish(std::move(n)));
}

Formula Formula::make_or(Formula left, Formula right) {
    Node n;
    n.kind = Kind::Or;
    std::string s;
    n.printed = wrap(left.node_, 2, s) + " | ";
    n.printed += wrap(right.node_, 3, s);
    n.level = 2;
    n.left = std::move(left.node_);
    n.right = std::move(right.node_);
    return Formula(finish(std::move(n)));
}

Formula Formula::make_imp(Formula left, Formula right) {
    Node n;
    n.kind = Kind::Imp;
    std::string s;
    if (right.kind() == Kind::Bottom) {
        n.printed = "~" + wrap(left.node_, 4, s);
        n.level = 4;
    } else {
        n.printed = wrap(left.node_, 2, s) + " -> ";
        n.printed += wrap(right.node_, 1, s);
        n.level = 1;
    }
    n.left = std::move(left.node_);
    n.right = std::move(right.node_);
    return Formula(finish(std::move(n)));
}

Formula Formula::make_not(Formula f) { return make_imp(std::move(f), make_bottom()); }

Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::atom_name() const { return node_->name; }

Formula Formula::left() const { return Formula(node_->left); }

Formula Formula::right() const { return Formula(node_->right); }

bool Formula::is_negation() const noexcept {
    return node_->kind == Kind::Imp && node_->right->kind == Kind::Bottom;
}

Formula Formula::negation_body() const { return Formula(node_->left); }

const std::string& Formula::printed() const noexcept { return node_->printed; }

bool Formula::operator==(const Formula& o) const noexcept {
    return node_ == o.node_ ||
           (node_->hash == o.node_->hash && node_->printed == o.node_->printed);
}

std::size_t Formula::hash() const noexcept { return node_->hash; }

std::string print(const Formula& f) { return f.printed(); }

std::vector<Formula> subformulas(const Formula& f) {
    std::vector<Formula> out;
    std::unordered_set<std::string> seen;
    std::function<void(const Formula&)> visit = [&](const Formula& g) {
        if (g.kind() == Kind::And || g.kind() == Kind::Or || g.kind() == Kind::Imp) {
            visit(g.left());
            visit(g.right());
        }
        if (seen.insert(g.printed()).second) out.push_back(g);
    };
    visit(f);
    return out;
}

// ── Lexer / parser ──────────────────────────────────────────────────────────

namespace {

struct Token {
    enum Type { TAtom, TBottom, TAnd, TOr, TImp, TNot, TLParen, TRParen,
                TComma, TLBrace, TRBrace, TLess, TEnd };
    Type type;
    std::string text;
    std::size_t offset;
};

const char* token_name(Token::Type t) {
    switch (t) {
        case Token::TAtom: return "an atom";
        case Token::TBottom: return "'_|_'";
        case Token::TAnd: return "'&'";
        case Token::TOr: return "'|'";
        case Token::TImp: return "'->'";
        case Token::TNot: return "'~'";
        case Token::TLParen: return "'('";
        case Token::TRParen: return "')'";
        case Token::TComma: return "','";
        case Token::TLBrace: return "'{'";
        case Token::TRBrace: return "'}'";
        case Token::TLess: return "'<'";
        case Token::TEnd: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Token::TAtom, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        switch (c) {
            case '_':
                if (text.substr(i, 3) != "_|_")
                    throw ParseError(i, {"'_|_'"}, "stray '_'");
                out.push_back({Token::TBottom, "_|_", i});
                i += 3;
                continue;
            case '-':
                if (i + 1 >= n || text[i + 1] != '>')
                    throw ParseError(i, {"'->'"}, "stray '-'");
                out.push_back({Token::TImp, "->", i});
                i += 2;
                continue;
            case '&': out.push_back({Token::TAnd, "&", i}); ++i; continue;
            case '|': out.push_back({Token::TOr, "|", i}); ++i; continue;
            case '~': out.push_back({Token::TNot, "~", i}); ++i; continue;
            case '(': out.push_back({Token::TLParen, "(", i}); ++i; continue;
            case ')': out.push_back({Token::TRParen, ")", i}); ++i; continue;
            case ',': out.push_back({Token::TComma, ",", i}); ++i; continue;
            case '{': out.push_back({Token::TLBrace, "{", i}); ++i; continue;
            case '}': out.push_back({Token::TRBrace, "}", i}); ++i; continue;
            case '<': out.push_back({Token::TLess, "<", i}); ++i; continue;
            default:
                throw ParseError(i, {}, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::TEnd, "", n});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Formula formula_document() {
        Formula f = implication();
        expect(Token::TEnd, {"'&'", "'|'", "'->'", "end of input"});
        return f;
    }

    RawClaim claim_document() {
        expect(Token::TLBrace, {"'{'"});
        RawClaim claim{{}, Formula::make_bottom()};
        claim.ground_items.push_back(implication());
        while (peek().type == Token::TComma) {
            ++pos_;
            claim.ground_items.push_back(implication());
        }
        expect(Token::TRBrace, {"','", "'}'"});
        expect(Token::TLess, {"'<'"});
        claim.target = implication();
        expect(Token::TEnd, {"'&'", "'|'", "'->'", "end of input"});
        return claim;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    void expect(Token::Type t, std::vector<std::string> expected) {
        if (peek().type != t)
            throw ParseError(peek().offset, std::move(expected),
                             std::string("found ") + token_name(peek().type));
        ++pos_;
    }

    Formula implication() {
        Formula l = disjunction();
        if (peek().type == Token::TImp) {
            ++pos_;
            return Formula::make_imp(l, implication());
        }
        return l;
    }

    Formula disjunction() {
        Formula l = conjunction();
        while (peek().type == Token::TOr) {
            ++pos_;
            l = Formula::make_or(l, conjunction());
        }
        return l;
    }

    Formula conjunction() {
        Formula l = unary();
        while (peek().type == Token::TAnd) {
            ++pos_;
            l = Formula::make_and(l, unary());
        }
        return l;
    }

    Formula unary() {
        if (peek().type == Token::TNot) {
            ++pos_;
            return Formula::make_not(unary());
        }
        return primary();
    }

    Formula primary() {
        const Token& t = peek();
        switch (t.type) {
            case Token::TAtom: ++pos_; return Formula::make_atom(t.text);
            case Token::TBottom: ++pos_; return Formula::make_bottom();
            case Token::TLParen: {
                ++pos_;
                Formula f = implication();
                expect(Token::TRParen, {"')'"});
                return f;
            }
            default:
                throw ParseError(t.offset, {"an atom", "'_|_'", "'~'", "'('"},
                                 std::string("found ") + token_name(t.type));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    return Parser(text).formula_document();
}

RawClaim parse_claim_raw(std::string_view text) {
    return Parser(text).claim_document();
}

GroundingClaim parse_claim(std::string_view text) {
    RawClaim raw = parse_claim_raw(text);
    return GroundingClaim{FormulaSet(std::move(raw.ground_items)), raw.target};
}

// ── Canonical collections ───────────────────────────────────────────────────

namespace {

bool formula_less(const Formula& a, const Formula& b) { return a.printed() < b.printed(); }

std::string render_items(const std::vector<Formula>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += items[i].printed();
    }
    out += "}";
    return out;
}

}  // namespace

FormulaSet::FormulaSet(std::vector<Formula> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), formula_less);
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void FormulaSet::insert(const Formula& f) {
    auto it = std::lower_bound(items_.begin(), items_.end(), f, formula_less);
    if (it == items_.end() || *it != f) items_.insert(it, f);
}

bool FormulaSet::contains(const Formula& f) const {
    return std::binary_search(items_.begin(), items_.end(), f, formula_less);
}

FormulaSet FormulaSet::united_with(const FormulaSet& o) const {
    FormulaSet out;
    out.items_.reserve(items_.size() + o.items_.size());
    std::set_union(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                   std::back_inserter(out.items_), formula_less);
    return out;
}

bool FormulaSet::subset_of(const FormulaSet& o) const {
    return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end(),
                         formula_less);
}

std::string FormulaSet::to_string() const { return render_items(items_); }

bool FormulaSet::operator==(const FormulaSet& o) const noexcept { return items_ == o.items_; }

bool FormulaSet::operator<(const FormulaSet& o) const noexcept {
    return std::lexicographical_compare(items_.begin(), items_.end(),
                                        o.items_.begin(), o.items_.end(), formula_less);
}

FormulaBag::FormulaBag(std::vector<Formula> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), formula_less);
}

void FormulaBag::add(const Formula& f) {
    items_.insert(std::lower_bound(items_.begin(), items_.end(), f, formula_less), f);
}

bool FormulaBag::remove_one(const Formula& f) {
    auto it = std::lower_bound(items_.begin(), items_.end(), f, formula_less);
    if (it == items_.end() || *it != f) return false;
    items_.erase(it);
    return true;
}

std::size_t FormulaBag::count(const Formula& f) const {
    auto range = std::equal_range(items_.begin(), items_.end(), f, formula_less);
    return static_cast<std::size_t>(range.second - range.first);
}

FormulaBag FormulaBag::summed_with(const FormulaBag& o) const {
    FormulaBag out;
    out.items_.reserve(items_.size() + o.items_.size());
    std::merge(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
               std::back_inserter(out.items_), formula_less);
    return out;
}

FormulaSet FormulaBag::collapsed() const { return FormulaSet(items_); }

bool FormulaBag::has_duplicates() const {
    return std::adjacent_find(items_.begin(), items_.end()) != items_.end();
}

std::string FormulaBag::to_string() const { return render_items(items_); }

bool FormulaBag::operator==(const FormulaBag& o) const noexcept { return items_ == o.items_; }

std::string GroundingClaim::to_string() const {
    return ground.to_string() + " < " + target.printed();
}

}  // namespace groundkit
