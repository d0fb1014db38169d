#pragma once

// Named total transformations on sequence sets, their monoid under
// composition, and corpus-relative checking of theory preservation. A
// transformation is preserved for a formula set on given test families when
// every formula that lies in the theory of a test set also lies in the
// theory of its image; a failure is returned as a concrete witness.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sppkit/galois.hpp"
#include "sppkit/profile.hpp"
#include "sppkit/prover.hpp"

namespace sppkit {

using SequenceSet = std::set<ProfileSequence>;

class Transformation {
public:
    enum class Kind : std::uint8_t {
        Identity,
        AppendProfile,     // prepend p in time: P -> concat([p], P)
        DropOldest,        // drop the k oldest profiles when length permits
        FactorPermutation, // out[f] = in[perm[f]] per profile
        SignatureMap,      // pointwise signature relabeling
        UnionConstant,     // set-level: add a fixed sequence set
        ReplaceConstant,   // set-level: replace by a fixed sequence set
        Composite,
    };

    static Transformation identity();
    static Transformation append_profile(const Profile& p);
    static Transformation drop_oldest(std::size_t k);
    static Transformation factor_permutation(const std::array<Factor, kFactorCount>& perm);
    static Transformation signature_map(const std::array<Signature, kSignatureCount>& map);
    static Transformation union_constant(SequenceSet extra);
    static Transformation replace_constant(SequenceSet value);

    // apply(compose(f, g), s) == apply(f, apply(g, s))
    static Transformation compose(Transformation outer, Transformation inner);

    SequenceSet apply(const SequenceSet& input) const;

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // {"name": ..., "kind": ..., parameters}; composite as {"list": [...]}.
    static Transformation from_json_text(std::string_view text);
    static Transformation from_json_file(const std::string& path);
    // A file may hold either one spec or an array of specs.
    static std::vector<Transformation> list_from_json_file(const std::string& path);

private:
    Transformation() = default;

    Kind kind_ = Kind::Identity;
    std::string name_ = "identity";
    Profile profile_{};
    std::size_t drop_count_ = 0;
    std::array<Factor, kFactorCount> perm_{};
    std::array<Signature, kSignatureCount> sig_map_{};
    SequenceSet constant_;
    std::vector<Transformation> parts_; // composite, outermost first
};

struct PreservationVerdict {
    bool preserved = true;
    // set on violation: the failing test family and formula
    std::optional<SequenceSet> witness_set;
    std::optional<Formula> witness_formula;
};

// Corpus-relative evidence, not a universal proof: checks every test set
// against its image under tau.
PreservationVerdict preserves(const Transformation& tau, const std::vector<Formula>& phi,
                              const std::vector<SequenceSet>& tests,
                              const ProverOptions& options = {});

struct CategoryReportEntry {
    std::string candidate;
    PreservationVerdict verdict;
};

std::vector<CategoryReportEntry> category_membership_report(
    const std::vector<Formula>& phi, const std::vector<Transformation>& candidates,
    const std::vector<SequenceSet>& tests, const ProverOptions& options = {});

} // namespace sppkit
