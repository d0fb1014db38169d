#pragma once

// Decision procedure for intuitionistic propositional derivability. A goal
// is derivable from a finite axiom base iff it lies in the closure of the
// base under the intuitionistic Hilbert schemas and modus ponens; this is
// decided by terminating backward proof search in a contraction-free
// single-succedent sequent calculus, with the base formulas as standing
// antecedents. Negation is handled as ~x = x -> F.

#include <cstdint>
#include <memory>
#include <vector>

#include "sppkit/errors.hpp"
#include "sppkit/formula.hpp"

namespace sppkit {

struct ProverOptions {
    // Search nodes allowed per goal before giving up. Exceeding the budget
    // raises BudgetExceededError, which is distinct from "not derivable".
    std::uint64_t step_budget = 1'000'000;
};

enum class Verdict : std::uint8_t { Derivable, NotDerivable, BudgetExceeded };

// Reusable engine bound to one axiom base; caches interned formulas and
// solved sequents across goals. Reentrant between calls, no shared state
// with other instances.
class Prover {
public:
    explicit Prover(const AxiomBase& base, ProverOptions options = {});
    ~Prover();
    Prover(Prover&&) noexcept;
    Prover& operator=(Prover&&) noexcept;

    bool derives(const Formula& goal); // throws BudgetExceededError
    Verdict try_derive(const Formula& goal);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

bool derives(const AxiomBase& base, const Formula& goal, const ProverOptions& options = {});
Verdict try_derives(const AxiomBase& base, const Formula& goal, const ProverOptions& options = {});
std::vector<bool> derives_all(const AxiomBase& base, const std::vector<Formula>& goals,
                              const ProverOptions& options = {});

// The nine intuitionistic Hilbert axiom schemas instantiated at (f, g, h).
// Every instance is derivable from the empty base.
std::vector<Formula> hilbert_axiom_instances(const Formula& f, const Formula& g,
                                             const Formula& h);

} // namespace sppkit
