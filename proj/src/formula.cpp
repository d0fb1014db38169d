#include "sppkit/formula.hpp"

#include <algorithm>

namespace sppkit {

struct Formula::Node {
    Kind kind;
    Atom atom{};
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    std::size_t hash = 0;
    std::size_t depth = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

std::string atom_token(const Atom& a) {
    return std::string(factor_name(a.factor)) + std::string(signature_token(a.signature));
}

bool atom_true_at(const Profile& p, const Atom& a, TruthMode mode) {
    if (mode == TruthMode::Full)
        return p[a.factor] == a.signature;
    return modulo_quanta(p[a.factor]) == modulo_quanta(a.signature);
}

Formula Formula::atom(Atom a) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->atom = a;
    node->hash = mix(static_cast<std::size_t>(Kind::Atom) + 1,
                     index_of(a.factor) * kSignatureCount + index_of(a.signature));
    node->depth = 0;
    return Formula(std::move(node));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    node->a = lhs.node_;
    node->b = rhs.node_;
    node->hash = mix(mix(static_cast<std::size_t>(Kind::And) + 1, lhs.hash()), rhs.hash());
    node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(std::move(node));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    node->a = lhs.node_;
    node->b = rhs.node_;
    node->hash = mix(mix(static_cast<std::size_t>(Kind::Or) + 1, lhs.hash()), rhs.hash());
    node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(std::move(node));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Implies;
    node->a = lhs.node_;
    node->b = rhs.node_;
    node->hash = mix(mix(static_cast<std::size_t>(Kind::Implies) + 1, lhs.hash()), rhs.hash());
    node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->a = operand.node_;
    node->hash = mix(static_cast<std::size_t>(Kind::Not) + 1, operand.hash());
    node->depth = operand.depth() + 1;
    return Formula(std::move(node));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
    return conj(implies(lhs, rhs), implies(rhs, lhs));
}

Formula Formula::falsum() {
    const Formula designated = atom(Factor::H, Signature::Zero);
    return conj(designated, negation(designated));
}

Formula Formula::verum() { return negation(falsum()); }

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom_value() const { return node_->atom; }

Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
Formula Formula::operand() const { return Formula(node_->a); }

std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::depth() const { return node_->depth; }

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_)
        return true;
    if (node_->hash != other.node_->hash || node_->kind != other.node_->kind)
        return false;
    switch (node_->kind) {
    case Kind::Atom:
        return node_->atom == other.node_->atom;
    case Kind::Not:
        return operand() == other.operand();
    default:
        return left() == other.left() && right() == other.right();
    }
}

namespace {

int precedence(Formula::Kind kind) {
    switch (kind) {
    case Formula::Kind::Atom: return 4;
    case Formula::Kind::Not: return 3;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Or: return 1;
    default: return 0; // Implies
    }
}

void print(const Formula& f, int parent_prec, std::string& out) {
    const int prec = precedence(f.kind());
    const bool parens = prec < parent_prec;
    if (parens)
        out += '(';
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += atom_token(f.atom_value());
        break;
    case Formula::Kind::Not:
        out += '~';
        print(f.operand(), precedence(Formula::Kind::Not), out);
        break;
    case Formula::Kind::And:
        print(f.left(), precedence(Formula::Kind::And), out);
        out += " & ";
        print(f.right(), precedence(Formula::Kind::And), out);
        break;
    case Formula::Kind::Or:
        print(f.left(), precedence(Formula::Kind::Or), out);
        out += " | ";
        print(f.right(), precedence(Formula::Kind::Or), out);
        break;
    case Formula::Kind::Implies:
        // right-associative: parenthesise a nested implication on the left
        print(f.left(), precedence(Formula::Kind::Implies) + 1, out);
        out += " -> ";
        print(f.right(), precedence(Formula::Kind::Implies), out);
        break;
    }
    if (parens)
        out += ')';
}

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out.push_back(f.atom_value());
        break;
    case Formula::Kind::Not:
        collect_atoms(f.operand(), out);
        break;
    default:
        collect_atoms(f.left(), out);
        collect_atoms(f.right(), out);
    }
}

} // namespace

std::string Formula::to_string() const {
    std::string out;
    print(*this, 0, out);
    return out;
}

std::vector<Atom> Formula::atoms() const {
    std::vector<Atom> out;
    collect_atoms(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Formula profile_formula(const Profile& p, TruthMode mode) {
    Formula result = Formula::atom(Factor::H, mode == TruthMode::Plain
                                                  ? to_signature(modulo_quanta(p[Factor::H]))
                                                  : p[Factor::H]);
    for (std::size_t i = 1; i < kFactorCount; ++i) {
        const Factor f = kFactors[i];
        const Signature s =
            mode == TruthMode::Plain ? to_signature(modulo_quanta(p[f])) : p[f];
        result = Formula::conj(result, Formula::atom(f, s));
    }
    return result;
}

AxiomBase::AxiomBase(const std::vector<Formula>& formulas) {
    for (const Formula& f : formulas)
        insert(f);
}

void AxiomBase::insert(const Formula& f) {
    if (!contains(f))
        formulas_.push_back(f);
}

bool AxiomBase::contains(const Formula& f) const {
    return std::any_of(formulas_.begin(), formulas_.end(),
                       [&](const Formula& g) { return g == f; });
}

// ---------------------------------------------------------------------------
// Formula grammar
//
//   implication := disjunction ('->' implication)?
//   disjunction := conjunction ('|' conjunction)*
//   conjunction := negation ('&' negation)*
//   negation    := '~' negation | primary
//   primary     := atom | 'T' | 'F' | '(' implication ')'
//
// Atoms are a factor name immediately followed by a signature token, both
// matched greedily ("hy" before "h", "pm+" before "pm").

namespace {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Formula parse() {
        Formula f = implication();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    Formula implication() {
        Formula lhs = disjunction();
        skip_space();
        if (match("->"))
            return Formula::implies(lhs, implication());
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        skip_space();
        while (peek() == '|') {
            ++pos_;
            lhs = Formula::disj(lhs, conjunction());
            skip_space();
        }
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = negation();
        skip_space();
        while (peek() == '&') {
            ++pos_;
            lhs = Formula::conj(lhs, negation());
            skip_space();
        }
        return lhs;
    }

    Formula negation() {
        skip_space();
        if (peek() == '~') {
            ++pos_;
            return Formula::negation(negation());
        }
        return primary();
    }

    Formula primary() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Formula inner = implication();
            skip_space();
            if (!match(")"))
                fail("expected ')'");
            return inner;
        }
        if (c == 'T' && !is_atom_start(pos_ + 1)) {
            ++pos_;
            return Formula::verum();
        }
        if (c == 'F' && !is_atom_start(pos_ + 1)) {
            ++pos_;
            return Formula::falsum();
        }
        return atom();
    }

    Formula atom() {
        // longest factor name first, then longest signature token
        static constexpr std::array<std::string_view, kFactorCount> by_length = {
            "hy", "h", "s", "e", "k", "p", "d", "m",
        };
        for (std::string_view name : by_length) {
            if (text_.substr(pos_).starts_with(name)) {
                const std::size_t sig_pos = pos_ + name.size();
                if (auto sig = longest_signature(sig_pos)) {
                    pos_ = sig_pos + signature_token(*sig).size();
                    return Formula::atom(*factor_from_name(name), *sig);
                }
                pos_ = sig_pos;
                fail("expected a signature token after factor '" + std::string(name) + "'");
            }
        }
        fail("expected an atom, 'T', 'F', '~' or '('");
    }

    std::optional<Signature> longest_signature(std::size_t at) const {
        std::optional<Signature> best;
        std::size_t best_len = 0;
        for (Signature s : kSignatures) {
            const std::string_view tok = signature_token(s);
            if (tok.size() > best_len && text_.substr(at).starts_with(tok)) {
                best = s;
                best_len = tok.size();
            }
        }
        return best;
    }

    bool is_atom_start(std::size_t at) const {
        if (at >= text_.size())
            return false;
        const char c = text_[at];
        return ('a' <= c && c <= 'z') || c == '0' || c == '+' || c == '-' || c == '!';
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool lookahead(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

    bool match(std::string_view s) {
        if (lookahead(s)) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " at position " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

} // namespace sppkit
