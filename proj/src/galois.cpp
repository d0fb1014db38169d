#include "sppkit/galois.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sppkit {

Corpus Corpus::from_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open corpus manifest: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid corpus manifest: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("corpus manifest must be a JSON object mapping names to paths");

    const auto dir = std::filesystem::path(path).parent_path();
    Corpus corpus;
    for (const auto& [name, value] : doc.items()) {
        if (!value.is_string())
            throw ParseError("corpus entry '" + name + "' must be a path string");
        auto entry_path = std::filesystem::path(value.get<std::string>());
        if (entry_path.is_relative())
            entry_path = dir / entry_path;
        corpus.entries.emplace(name, load_sequence(entry_path.string()));
    }
    return corpus;
}

bool TheoryHandle::contains(const Formula& f) const {
    for (const AxiomBase& base : bases_) {
        if (!Prover(base, options_).derives(f))
            return false;
    }
    return true;
}

std::set<std::string> right_polarity(const std::vector<Formula>& phi, const Corpus& c,
                                     const ProverOptions& options) {
    std::set<std::string> out;
    for (const auto& [name, sequence] : c.entries) {
        Prover prover(to_axiom_base(mine(sequence)), options);
        const bool all = std::all_of(phi.begin(), phi.end(),
                                     [&](const Formula& f) { return prover.derives(f); });
        if (all)
            out.insert(name);
    }
    return out;
}

namespace {

InvariantSet full_invariant_set() {
    InvariantSet set;
    set.bits().set();
    return set;
}

} // namespace

TheoryHandle left_polarity(const std::set<std::string>& names, const Corpus& c,
                           const ProverOptions& options) {
    TheoryHandle handle;
    handle.options_ = options;
    handle.members_ = names;
    handle.ground_base_ = full_invariant_set(); // intersection over the empty family
    for (const std::string& name : names) {
        auto it = c.entries.find(name);
        if (it == c.entries.end())
            throw std::invalid_argument("sequence '" + name + "' is not in the corpus");
        const InvariantSet mined = mine(it->second);
        handle.ground_base_.bits() &= mined.bits();
        handle.bases_.push_back(to_axiom_base(mined));
    }
    handle.ground_base_.provenance = "left-polarity";
    return handle;
}

TheoryHandle theory_of(const std::vector<ProfileSequence>& sequences,
                       const ProverOptions& options) {
    TheoryHandle handle;
    handle.options_ = options;
    handle.ground_base_ = full_invariant_set();
    int i = 0;
    for (const ProfileSequence& sequence : sequences) {
        handle.members_.insert("#" + std::to_string(i++));
        const InvariantSet mined = mine(sequence);
        handle.ground_base_.bits() &= mined.bits();
        handle.bases_.push_back(to_axiom_base(mined));
    }
    return handle;
}

bool adjunction_check(const std::vector<Formula>& phi, const std::set<std::string>& names,
                      const Corpus& c, const ProverOptions& options) {
    const std::set<std::string> right = right_polarity(phi, c, options);
    const bool lhs = std::includes(right.begin(), right.end(), names.begin(), names.end());

    const TheoryHandle theory = left_polarity(names, c, options);
    const bool rhs = std::all_of(phi.begin(), phi.end(),
                                 [&](const Formula& f) { return theory.contains(f); });
    return lhs == rhs;
}

bool kernel_equiv_formulas(const std::vector<Formula>& phi, const std::vector<Formula>& psi,
                           const Corpus& c, const ProverOptions& options) {
    return right_polarity(phi, c, options) == right_polarity(psi, c, options);
}

bool kernel_equiv_sequences(const std::set<std::string>& names,
                            const std::set<std::string>& other, const Corpus& c,
                            const ProverOptions& options) {
    return left_polarity(names, c, options).ground_base() ==
           left_polarity(other, c, options).ground_base();
}

std::vector<Formula> quotient_join(const std::vector<Formula>& phi,
                                   const std::vector<Formula>& psi) {
    AxiomBase joined(phi);
    for (const Formula& f : psi)
        joined.insert(f);
    return joined.formulas();
}

} // namespace sppkit
