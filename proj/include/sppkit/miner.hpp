#pragma once

// Ground-implication mining. A sequence is folded into an 8x8 grid of 4x4
// counters: cell (a, c, va, vc) ends up holding the number of profiles at
// which the material implication "factor a carries va -> factor c carries
// vc" fails (signatures compared with quanta stripped). Zero cells are the
// mined invariants. A brute-force per-pair oracle is kept alongside the
// counter kernel as an independent route to the same set.

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sppkit/formula.hpp"
#include "sppkit/profile.hpp"

namespace sppkit {

// An atom over the quanta-stripped signature domain.
struct PlainAtom {
    Factor factor{};
    PlainSignature signature{};

    auto operator<=>(const PlainAtom&) const = default;
};

inline constexpr std::size_t kPlainAtomCount = kFactorCount * kPlainSignatureCount;

constexpr std::size_t plain_atom_index(PlainAtom a) {
    return index_of(a.factor) * kPlainSignatureCount + static_cast<std::size_t>(code(a.signature));
}

constexpr PlainAtom plain_atom_from_index(std::size_t i) {
    return PlainAtom{kFactors[i / kPlainSignatureCount],
                     plain_from_code(static_cast<int>(i % kPlainSignatureCount))};
}

Atom to_atom(PlainAtom a);
Formula to_formula(PlainAtom a);
std::string plain_atom_token(PlainAtom a);

struct GroundImplication {
    PlainAtom antecedent{};
    PlainAtom consequent{};

    auto operator<=>(const GroundImplication&) const = default;
};

Formula to_formula(const GroundImplication& g);

// The 8x8x4x4 counter table. Cells are indexed by antecedent factor,
// consequent factor, antecedent plain-signature code, consequent
// plain-signature code; every count lies in [0, sequence_length].
class ImplicationTable {
public:
    static constexpr std::size_t kCellCount =
        kFactorCount * kFactorCount * kPlainSignatureCount * kPlainSignatureCount;

    explicit ImplicationTable(std::size_t sequence_length);

    static constexpr std::size_t index(Factor a, Factor c, PlainSignature va, PlainSignature vc) {
        return ((index_of(a) * kFactorCount + index_of(c)) * kPlainSignatureCount +
                static_cast<std::size_t>(code(va))) *
                   kPlainSignatureCount +
               static_cast<std::size_t>(code(vc));
    }

    std::uint32_t at(Factor a, Factor c, PlainSignature va, PlainSignature vc) const {
        return counts_[index(a, c, va, vc)];
    }
    std::uint32_t& cell(Factor a, Factor c, PlainSignature va, PlainSignature vc) {
        return counts_[index(a, c, va, vc)];
    }

    const std::array<std::uint32_t, kCellCount>& counts() const { return counts_; }
    std::array<std::uint32_t, kCellCount>& counts() { return counts_; }

    std::size_t sequence_length() const { return length_; }
    void set_sequence_length(std::size_t length) { length_ = length; }

    bool operator==(const ImplicationTable&) const = default;

private:
    std::array<std::uint32_t, kCellCount> counts_;
    std::size_t length_;
};

// The zero-count cells of a table, as a set of ground implications.
// Reflexively and transitively closed by construction.
class InvariantSet {
public:
    bool contains(const GroundImplication& g) const {
        return cells_[bit_index(g)];
    }
    void insert(const GroundImplication& g) { cells_.set(bit_index(g)); }

    std::size_t size() const { return cells_.count(); }
    std::vector<GroundImplication> implications() const;

    const std::bitset<kPlainAtomCount * kPlainAtomCount>& bits() const { return cells_; }
    std::bitset<kPlainAtomCount * kPlainAtomCount>& bits() { return cells_; }

    bool operator==(const InvariantSet& other) const { return cells_ == other.cells_; }

    std::string provenance;

private:
    static constexpr std::size_t bit_index(const GroundImplication& g) {
        return plain_atom_index(g.antecedent) * kPlainAtomCount +
               plain_atom_index(g.consequent);
    }

    std::bitset<kPlainAtomCount * kPlainAtomCount> cells_;
};

// Counter kernel: every cell starts at the sequence length and is
// discounted once per profile at which its material implication holds.
// update() picks the parallel kernel when it pays off; update_serial is the
// reference transcription of the discount loop, update_parallel accumulates
// per-profile failure counts across threads. All three agree cell for cell.
ImplicationTable update(const ProfileSequence& p);
ImplicationTable update_serial(const ProfileSequence& p);
ImplicationTable update_parallel(const ProfileSequence& p);

// Number of profiles at which the cell's material implication fails;
// 0 means the implication is an invariant of the whole sequence.
std::uint32_t distance(const ImplicationTable& t, Factor a, Factor c, PlainSignature va,
                       PlainSignature vc);

// Zero cells of update(p).
InvariantSet mine(const ProfileSequence& p);

// Independent ground truth: the per-pair double loop over profiles.
InvariantSet oracle_mine(const ProfileSequence& p);

enum class InvariantClass : std::uint8_t {
    VacuousConsequentAlwaysTrue,
    VacuousAntecedentNeverTrue,
    NonVacuous,
};

std::string_view invariant_class_name(InvariantClass c);

// Classifies a mined invariant; throws NotAnInvariantError when g does not
// hold throughout p.
InvariantClass classify(const GroundImplication& g, const ProfileSequence& p);

// The non-vacuous invariants of p, excluding the reflexive diagonal, sorted.
std::vector<GroundImplication> non_vacuous_invariants(const ProfileSequence& p);

// Atoms that non-vacuously imply at least one other atom and are
// non-vacuously implied by none, ranked by how many distinct atoms they
// imply (ties broken by factor order then signature code).
std::vector<std::pair<PlainAtom, int>> causal_factors(const ProfileSequence& p);

struct ConjunctiveImplication {
    std::vector<PlainAtom> antecedent; // sorted, at most one atom per factor
    PlainAtom consequent{};

    auto operator<=>(const ConjunctiveImplication&) const = default;
};

// All minimal conjunctive antecedents (arity <= max_arity, at most one atom
// per factor, consequent not among them) whose material implication holds at
// every profile. When the consequent is always true the empty antecedent
// suffices and nothing is reported for it.
std::vector<ConjunctiveImplication> mine_conjunctive(const ProfileSequence& p, int max_arity,
                                                     std::optional<PlainAtom> target = {});

// Pairs (a, s) where the conjunction of s is jointly sufficient for a at
// every profile and each member of s is individually necessary (a -> member
// is a mined invariant). Minimality is not required.
std::vector<std::pair<PlainAtom, std::vector<PlainAtom>>>
equivalence_characterisations(const ProfileSequence& p, int max_arity);

AxiomBase to_axiom_base(const InvariantSet& set);

// External JSON form: array of {antecedent, consequent, count, class}.
std::string invariant_report_json(const ProfileSequence& p);

} // namespace sppkit
