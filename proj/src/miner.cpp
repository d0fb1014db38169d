#include "sppkit/miner.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

namespace sppkit {

Atom to_atom(PlainAtom a) { return Atom{a.factor, to_signature(a.signature)}; }

Formula to_formula(PlainAtom a) { return Formula::atom(to_atom(a)); }

std::string plain_atom_token(PlainAtom a) {
    return std::string(factor_name(a.factor)) + std::string(plain_signature_token(a.signature));
}

Formula to_formula(const GroundImplication& g) {
    return Formula::implies(to_formula(g.antecedent), to_formula(g.consequent));
}

ImplicationTable::ImplicationTable(std::size_t sequence_length) : length_(sequence_length) {
    counts_.fill(static_cast<std::uint32_t>(sequence_length));
}

std::vector<GroundImplication> InvariantSet::implications() const {
    std::vector<GroundImplication> out;
    out.reserve(cells_.count());
    for (std::size_t a = 0; a < kPlainAtomCount; ++a) {
        for (std::size_t c = 0; c < kPlainAtomCount; ++c) {
            if (cells_[a * kPlainAtomCount + c])
                out.push_back(GroundImplication{plain_atom_from_index(a), plain_atom_from_index(c)});
        }
    }
    return out;
}

namespace {

std::array<PlainSignature, kFactorCount> plain_codes(const Profile& profile) {
    std::array<PlainSignature, kFactorCount> out{};
    for (std::size_t i = 0; i < kFactorCount; ++i)
        out[i] = modulo_quanta(profile.signatures[i]);
    return out;
}

// True-atom bitmask of a profile over the 32 plain atoms.
std::uint32_t atom_mask(const Profile& profile) {
    std::uint32_t mask = 0;
    const auto codes = plain_codes(profile);
    for (std::size_t f = 0; f < kFactorCount; ++f)
        mask |= 1u << (f * kPlainSignatureCount + static_cast<std::size_t>(code(codes[f])));
    return mask;
}

} // namespace

ImplicationTable update_serial(const ProfileSequence& p) {
    ImplicationTable table(p.size());
    for (const Profile& profile : p) {
        const auto codes = plain_codes(profile);
        // consequent loop, each factor in turn
        for (std::size_t c = 0; c < kFactorCount; ++c) {
            const PlainSignature cmodq = codes[c];
            const Factor cf = kFactors[c];
            // 1.1 everything implies truth
            for (std::size_t a = 0; a < kFactorCount; ++a) {
                for (PlainSignature v : kPlainSignatures)
                    --table.cell(kFactors[a], cf, v, cmodq);
            }
            // 1.2 falsehood implies everything, i.e. every other consequent
            // signature under every false antecedent signature
            for (PlainSignature cc : co_set(cmodq)) {
                for (std::size_t a = 0; a < kFactorCount; ++a) {
                    for (PlainSignature ca : co_set(codes[a]))
                        --table.cell(kFactors[a], cf, ca, cc);
                }
            }
        }
    }
    return table;
}

ImplicationTable update_parallel(const ProfileSequence& p) {
    const auto n = static_cast<std::ptrdiff_t>(p.size());
    std::array<std::uint32_t, ImplicationTable::kCellCount> failures{};

#pragma omp parallel
    {
        std::array<std::uint32_t, ImplicationTable::kCellCount> local{};
#pragma omp for nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto codes = plain_codes(p[static_cast<std::size_t>(i)]);
            // the implication fails exactly where the antecedent signature is
            // the true one and the consequent signature is a false one
            for (std::size_t a = 0; a < kFactorCount; ++a) {
                for (std::size_t c = 0; c < kFactorCount; ++c) {
                    const PlainSignature va = codes[a];
                    for (PlainSignature vc : co_set(codes[c]))
                        ++local[ImplicationTable::index(kFactors[a], kFactors[c], va, vc)];
                }
            }
        }
#pragma omp critical
        {
            for (std::size_t i = 0; i < local.size(); ++i)
                failures[i] += local[i];
        }
    }

    ImplicationTable table(p.size());
    table.counts() = failures;
    return table;
}

ImplicationTable update(const ProfileSequence& p) {
#ifdef _OPENMP
    if (p.size() >= 256)
        return update_parallel(p);
#endif
    return update_serial(p);
}

std::uint32_t distance(const ImplicationTable& t, Factor a, Factor c, PlainSignature va,
                       PlainSignature vc) {
    return t.at(a, c, va, vc);
}

InvariantSet mine(const ProfileSequence& p) {
    const ImplicationTable table = update(p);
    InvariantSet set;
    for (std::size_t a = 0; a < kPlainAtomCount; ++a) {
        for (std::size_t c = 0; c < kPlainAtomCount; ++c) {
            const PlainAtom ante = plain_atom_from_index(a);
            const PlainAtom cons = plain_atom_from_index(c);
            if (table.at(ante.factor, cons.factor, ante.signature, cons.signature) == 0)
                set.insert(GroundImplication{ante, cons});
        }
    }
    return set;
}

InvariantSet oracle_mine(const ProfileSequence& p) {
    InvariantSet set;
    for (std::size_t a = 0; a < kPlainAtomCount; ++a) {
        for (std::size_t c = 0; c < kPlainAtomCount; ++c) {
            const Atom ante = to_atom(plain_atom_from_index(a));
            const Atom cons = to_atom(plain_atom_from_index(c));
            bool holds = true;
            for (const Profile& profile : p) {
                if (atom_true_at(profile, ante, TruthMode::Plain) &&
                    !atom_true_at(profile, cons, TruthMode::Plain)) {
                    holds = false;
                    break;
                }
            }
            if (holds)
                set.insert(
                    GroundImplication{plain_atom_from_index(a), plain_atom_from_index(c)});
        }
    }
    return set;
}

std::string_view invariant_class_name(InvariantClass c) {
    switch (c) {
    case InvariantClass::VacuousConsequentAlwaysTrue: return "vacuous-consequent";
    case InvariantClass::VacuousAntecedentNeverTrue: return "vacuous-antecedent";
    default: return "non-vacuous";
    }
}

namespace {

int truth_count(const ProfileSequence& p, PlainAtom a) {
    int n = 0;
    for (const Profile& profile : p) {
        if (atom_true_at(profile, to_atom(a), TruthMode::Plain))
            ++n;
    }
    return n;
}

} // namespace

InvariantClass classify(const GroundImplication& g, const ProfileSequence& p) {
    for (const Profile& profile : p) {
        if (atom_true_at(profile, to_atom(g.antecedent), TruthMode::Plain) &&
            !atom_true_at(profile, to_atom(g.consequent), TruthMode::Plain)) {
            throw NotAnInvariantError(plain_atom_token(g.antecedent) + " -> " +
                                      plain_atom_token(g.consequent) +
                                      " does not hold throughout the sequence");
        }
    }
    if (truth_count(p, g.consequent) == static_cast<int>(p.size()))
        return InvariantClass::VacuousConsequentAlwaysTrue;
    if (truth_count(p, g.antecedent) == 0)
        return InvariantClass::VacuousAntecedentNeverTrue;
    return InvariantClass::NonVacuous;
}

std::vector<GroundImplication> non_vacuous_invariants(const ProfileSequence& p) {
    std::vector<GroundImplication> out;
    for (const GroundImplication& g : mine(p).implications()) {
        if (g.antecedent == g.consequent)
            continue; // reflexive cells are logical, not psychological
        if (classify(g, p) == InvariantClass::NonVacuous)
            out.push_back(g);
    }
    return out;
}

std::vector<std::pair<PlainAtom, int>> causal_factors(const ProfileSequence& p) {
    const auto non_vacuous = non_vacuous_invariants(p);

    std::array<bool, kPlainAtomCount> implied{};
    std::array<std::bitset<kPlainAtomCount>, kPlainAtomCount> implies_set{};
    for (const GroundImplication& g : non_vacuous) {
        implied[plain_atom_index(g.consequent)] = true;
        implies_set[plain_atom_index(g.antecedent)].set(plain_atom_index(g.consequent));
    }

    std::vector<std::pair<PlainAtom, int>> ranked;
    for (std::size_t i = 0; i < kPlainAtomCount; ++i) {
        if (implies_set[i].any() && !implied[i])
            ranked.emplace_back(plain_atom_from_index(i), static_cast<int>(implies_set[i].count()));
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second)
            return lhs.second > rhs.second;
        return lhs.first < rhs.first;
    });
    return ranked;
}

namespace {

// Antecedent sets are encoded as bitmasks over the 32 plain atoms; a set is
// jointly sufficient for a consequent when no profile makes every antecedent
// atom true and the consequent false.
bool sufficient(const std::vector<std::uint32_t>& profile_masks, std::uint32_t antecedent,
                std::size_t consequent_index) {
    const std::uint32_t consequent_bit = 1u << consequent_index;
    for (std::uint32_t mask : profile_masks) {
        if ((mask & antecedent) == antecedent && !(mask & consequent_bit))
            return false;
    }
    return true;
}

// All antecedent masks with at most one atom per factor and 1..max_arity
// atoms, in mask order.
std::vector<std::uint32_t> antecedent_masks(int max_arity) {
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> current{0u};
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : current) {
            next.push_back(mask);
            for (std::size_t v = 0; v < kPlainSignatureCount; ++v)
                next.push_back(mask | (1u << (f * kPlainSignatureCount + v)));
        }
        current = std::move(next);
    }
    for (std::uint32_t mask : current) {
        const int bits = std::popcount(mask);
        if (bits >= 1 && bits <= max_arity)
            out.push_back(mask);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlainAtom> atoms_of_mask(std::uint32_t mask) {
    std::vector<PlainAtom> out;
    for (std::size_t i = 0; i < kPlainAtomCount; ++i) {
        if (mask & (1u << i))
            out.push_back(plain_atom_from_index(i));
    }
    return out;
}

} // namespace

std::vector<ConjunctiveImplication> mine_conjunctive(const ProfileSequence& p, int max_arity,
                                                     std::optional<PlainAtom> target) {
    if (max_arity < 1 || max_arity > static_cast<int>(kFactorCount))
        throw std::invalid_argument("max_arity must lie in 1..8");

    std::vector<std::uint32_t> masks;
    masks.reserve(p.size());
    for (const Profile& profile : p)
        masks.push_back(atom_mask(profile));

    std::vector<std::size_t> consequents;
    if (target) {
        consequents.push_back(plain_atom_index(*target));
    } else {
        for (std::size_t i = 0; i < kPlainAtomCount; ++i)
            consequents.push_back(i);
    }

    const std::vector<std::uint32_t> candidates = antecedent_masks(max_arity);

    std::vector<ConjunctiveImplication> out;
    for (std::size_t c : consequents) {
        // the empty antecedent suffices for an always-true consequent
        if (sufficient(masks, 0u, c))
            continue;
        const std::uint32_t consequent_bit = 1u << c;
        for (std::uint32_t antecedent : candidates) {
            if (antecedent & consequent_bit)
                continue;
            if (!sufficient(masks, antecedent, c))
                continue;
            // minimal: no one-smaller subset suffices
            bool minimal = true;
            for (std::uint32_t rest = antecedent; rest; rest &= rest - 1) {
                const std::uint32_t without = antecedent & ~(rest & ~(rest - 1));
                if (without != antecedent && sufficient(masks, without, c)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal)
                out.push_back(
                    ConjunctiveImplication{atoms_of_mask(antecedent), plain_atom_from_index(c)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<PlainAtom, std::vector<PlainAtom>>>
equivalence_characterisations(const ProfileSequence& p, int max_arity) {
    if (max_arity < 1 || max_arity > static_cast<int>(kFactorCount))
        throw std::invalid_argument("max_arity must lie in 1..8");

    std::vector<std::uint32_t> masks;
    masks.reserve(p.size());
    for (const Profile& profile : p)
        masks.push_back(atom_mask(profile));

    const InvariantSet invariants = mine(p);
    const std::vector<std::uint32_t> candidates = antecedent_masks(max_arity);

    std::vector<std::pair<PlainAtom, std::vector<PlainAtom>>> out;
    for (std::size_t c = 0; c < kPlainAtomCount; ++c) {
        const PlainAtom consequent = plain_atom_from_index(c);
        for (std::uint32_t antecedent : candidates) {
            if (!sufficient(masks, antecedent, c))
                continue;
            bool necessary = true;
            for (const PlainAtom& member : atoms_of_mask(antecedent)) {
                if (!invariants.contains(GroundImplication{consequent, member})) {
                    necessary = false;
                    break;
                }
            }
            if (necessary)
                out.emplace_back(consequent, atoms_of_mask(antecedent));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AxiomBase to_axiom_base(const InvariantSet& set) {
    AxiomBase base;
    for (const GroundImplication& g : set.implications())
        base.insert(to_formula(g));
    return base;
}

std::string invariant_report_json(const ProfileSequence& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const GroundImplication& g : mine(p).implications()) {
        out.push_back({
            {"antecedent",
             {{"factor", std::string(factor_name(g.antecedent.factor))},
              {"signature", std::string(plain_signature_token(g.antecedent.signature))}}},
            {"consequent",
             {{"factor", std::string(factor_name(g.consequent.factor))},
              {"signature", std::string(plain_signature_token(g.consequent.signature))}}},
            {"count", 0},
            {"class", std::string(invariant_class_name(classify(g, p)))},
        });
    }
    return out.dump(2);
}

} // namespace sppkit
