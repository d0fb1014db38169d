#pragma once

// Propositional language over profile atoms: an atom states that a factor
// carries a signature, formulas combine atoms with & | ~ ->. Falsehood and
// truth are macros over the designated atom h0: F = h0 & ~h0, T = ~F.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sppkit/profile.hpp"

namespace sppkit {

struct Atom {
    Factor factor{};
    Signature signature{};

    auto operator<=>(const Atom&) const = default;
};

// Token form, e.g. "h+", "s0", "hypm", "e-!!".
std::string atom_token(const Atom& a);

enum class TruthMode : std::uint8_t {
    Plain, // compare signatures with quanta stripped
    Full,  // exact signature equality
};

// Whether atom a holds at profile p.
bool atom_true_at(const Profile& p, const Atom& a, TruthMode mode = TruthMode::Plain);

// Immutable formula tree with shared subterms; cheap to copy.
class Formula {
public:
    enum class Kind : std::uint8_t { Atom, And, Or, Not, Implies };

    static Formula atom(Atom a);
    static Formula atom(Factor f, Signature s) { return atom(Atom{f, s}); }
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula negation(Formula operand);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula iff(Formula lhs, Formula rhs); // (lhs -> rhs) & (rhs -> lhs)

    // F := h0 & ~h0 and T := ~F, over the designated atom (h, 0).
    static Formula falsum();
    static Formula verum();

    Kind kind() const;
    const Atom& atom_value() const; // kind() == Atom
    Formula left() const;           // And/Or/Implies
    Formula right() const;          // And/Or/Implies
    Formula operand() const;        // Not

    bool operator==(const Formula& other) const; // structural
    bool operator!=(const Formula& other) const { return !(*this == other); }

    std::size_t hash() const;
    std::size_t depth() const; // atoms have depth 0

    // Grammar-compatible text: parse_formula(f.to_string()) == f.
    std::string to_string() const;

    std::vector<Atom> atoms() const; // distinct atoms, sorted

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Parses the ASCII grammar: atoms are a factor name immediately followed by
// a signature token ("h+", "kpm", "e-!!"); connectives ~ & | -> with
// precedence ~ > & > | > -> and right-associative ->; parentheses; T and F.
// Throws ParseError with a character position on bad input.
Formula parse_formula(std::string_view text);

// The 8-way conjunction of the profile's atoms, in factor order. In plain
// mode each signature is stripped of quanta first.
Formula profile_formula(const Profile& p, TruthMode mode = TruthMode::Plain);

// A finite set of formulas used as axioms; insertion order preserved,
// structural duplicates ignored.
class AxiomBase {
public:
    AxiomBase() = default;
    explicit AxiomBase(const std::vector<Formula>& formulas);

    void insert(const Formula& f);
    bool contains(const Formula& f) const;

    std::size_t size() const { return formulas_.size(); }
    bool empty() const { return formulas_.empty(); }
    auto begin() const { return formulas_.begin(); }
    auto end() const { return formulas_.end(); }
    const std::vector<Formula>& formulas() const { return formulas_; }

private:
    std::vector<Formula> formulas_;
};

} // namespace sppkit
