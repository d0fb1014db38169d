#pragma once

// Corpus-relative polarities between formula sets and named sequence sets:
// right polarity collects the sequences whose mined theory satisfies every
// given formula, left polarity represents the common theory of a selection
// by its finite ground base plus a prover-backed membership test. The pair
// forms an antitone Galois connection on every finite corpus.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sppkit/miner.hpp"
#include "sppkit/prover.hpp"

namespace sppkit {

struct Corpus {
    std::map<std::string, ProfileSequence> entries;

    // JSON manifest: object mapping entry name to a sequence-file path,
    // resolved relative to the manifest's directory.
    static Corpus from_manifest(const std::string& path);
};

// Finitely-represented theory of a sequence selection: the intersection of
// the members' mined invariant sets, plus per-member derivability checks
// for arbitrary formulas. An empty selection is the top theory, which
// contains every formula; is_top() flags it.
class TheoryHandle {
public:
    // Formula membership: every member sequence derives f from its mined base.
    bool contains(const Formula& f) const;

    const InvariantSet& ground_base() const { return ground_base_; }
    const std::set<std::string>& members() const { return members_; }
    bool is_top() const { return members_.empty(); }

private:
    friend TheoryHandle left_polarity(const std::set<std::string>&, const Corpus&,
                                      const ProverOptions&);
    friend TheoryHandle theory_of(const std::vector<ProfileSequence>&, const ProverOptions&);

    std::set<std::string> members_;
    std::vector<AxiomBase> bases_;
    InvariantSet ground_base_;
    ProverOptions options_;
};

// Names of the corpus sequences satisfying every formula of phi.
std::set<std::string> right_polarity(const std::vector<Formula>& phi, const Corpus& c,
                                     const ProverOptions& options = {});

// Theory of the selected sequences; throws std::invalid_argument for names
// outside the corpus.
TheoryHandle left_polarity(const std::set<std::string>& names, const Corpus& c,
                           const ProverOptions& options = {});

// Theory of a concrete sequence set, outside any named corpus.
TheoryHandle theory_of(const std::vector<ProfileSequence>& sequences,
                       const ProverOptions& options = {});

// The adjunction equivalence: names ⊆ right_polarity(phi) iff every formula
// of phi lies in left_polarity(names). Always true; exposed for testing.
bool adjunction_check(const std::vector<Formula>& phi, const std::set<std::string>& names,
                      const Corpus& c, const ProverOptions& options = {});

// Kernel equivalences: equality of right polarities, respectively of ground
// bases (sound and complete for theory equality, since closed ground bases
// generate equal theories exactly when they are equal).
bool kernel_equiv_formulas(const std::vector<Formula>& phi, const std::vector<Formula>& psi,
                           const Corpus& c, const ProverOptions& options = {});
bool kernel_equiv_sequences(const std::set<std::string>& names,
                            const std::set<std::string>& other, const Corpus& c,
                            const ProverOptions& options = {});

// Representative of the quotient join: the union of the representatives.
std::vector<Formula> quotient_join(const std::vector<Formula>& phi,
                                   const std::vector<Formula>& psi);

} // namespace sppkit
