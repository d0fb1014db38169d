#include "sppkit/prover.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace sppkit {

namespace {

enum class NKind : std::uint8_t { Bottom, Atom, And, Or, Imp };

// Interned formula node. Atoms store their code in `a`; Imp/And/Or store
// child ids. ~x is represented as x -> bottom (id 0).
struct Node {
    NKind kind;
    std::int32_t a;
    std::int32_t b;
};

using Context = std::vector<std::int32_t>; // sorted, duplicate-free

bool ctx_contains(const Context& ctx, std::int32_t id) {
    return std::binary_search(ctx.begin(), ctx.end(), id);
}

void ctx_insert(Context& ctx, std::int32_t id) {
    auto it = std::lower_bound(ctx.begin(), ctx.end(), id);
    if (it == ctx.end() || *it != id)
        ctx.insert(it, id);
}

void ctx_erase(Context& ctx, std::int32_t id) {
    auto it = std::lower_bound(ctx.begin(), ctx.end(), id);
    if (it != ctx.end() && *it == id)
        ctx.erase(it);
}

struct SequentKey {
    Context ctx;
    std::int32_t goal;

    bool operator==(const SequentKey&) const = default;
};

struct SequentKeyHash {
    std::size_t operator()(const SequentKey& key) const {
        std::size_t h = static_cast<std::size_t>(key.goal) * 0x9e3779b97f4a7c15ULL;
        for (std::int32_t id : key.ctx)
            h = (h ^ static_cast<std::size_t>(id)) * 0x100000001b3ULL;
        return h;
    }
};

} // namespace

struct Prover::Impl {
    std::vector<Node> nodes;
    std::unordered_map<std::uint64_t, std::int32_t> intern_index;
    std::unordered_map<SequentKey, bool, SequentKeyHash> memo;
    Context base_ctx;
    std::uint64_t steps = 0;
    std::uint64_t budget;

    explicit Impl(std::uint64_t budget) : budget(budget) {
        nodes.push_back(Node{NKind::Bottom, -1, -1}); // id 0
    }

    std::int32_t intern(NKind kind, std::int32_t a, std::int32_t b) {
        assert(nodes.size() < (1u << 30));
        const std::uint64_t key = (static_cast<std::uint64_t>(kind) << 60) |
                                  (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a) &
                                                              0x3fffffffu)
                                   << 30) |
                                  (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b) &
                                                              0x3fffffffu));
        auto [it, inserted] = intern_index.try_emplace(key, static_cast<std::int32_t>(nodes.size()));
        if (inserted)
            nodes.push_back(Node{kind, a, b});
        return it->second;
    }

    std::int32_t add(const Formula& f) {
        switch (f.kind()) {
        case Formula::Kind::Atom: {
            const Atom& at = f.atom_value();
            const auto atom_code = static_cast<std::int32_t>(
                index_of(at.factor) * kSignatureCount + index_of(at.signature));
            return intern(NKind::Atom, atom_code, -1);
        }
        case Formula::Kind::And:
            return intern(NKind::And, add(f.left()), add(f.right()));
        case Formula::Kind::Or:
            return intern(NKind::Or, add(f.left()), add(f.right()));
        case Formula::Kind::Implies:
            return intern(NKind::Imp, add(f.left()), add(f.right()));
        default: // Not
            return intern(NKind::Imp, add(f.operand()), 0);
        }
    }

    void bump() {
        if (++steps > budget)
            throw BudgetExceededError(budget);
    }

    // Backward search. Invertible rules are applied eagerly; the only
    // choice points are the disjunction goal and implication-implication
    // antecedents.
    bool prove(Context ctx, std::int32_t goal) {
        bump();

        // Saturate with the non-branching invertible left rules.
        bool changed = true;
        while (changed) {
            changed = false;
            if (ctx_contains(ctx, 0))
                return true; // falsehood in the context
            for (std::size_t i = 0; i < ctx.size(); ++i) {
                const std::int32_t id = ctx[i];
                const Node n = nodes[id];
                if (n.kind == NKind::And) {
                    ctx_erase(ctx, id);
                    ctx_insert(ctx, n.a);
                    ctx_insert(ctx, n.b);
                    changed = true;
                    bump();
                    break;
                }
                if (n.kind != NKind::Imp)
                    continue;
                if (n.a == 0) { // bottom -> b holds vacuously
                    ctx_erase(ctx, id);
                    changed = true;
                    bump();
                    break;
                }
                const Node ante = nodes[n.a];
                if (ante.kind == NKind::Atom) {
                    if (ctx_contains(ctx, n.a)) {
                        ctx_erase(ctx, id);
                        ctx_insert(ctx, n.b);
                        changed = true;
                        bump();
                        break;
                    }
                } else if (ante.kind == NKind::And) {
                    // (c & d) -> b  ~>  c -> (d -> b)
                    ctx_erase(ctx, id);
                    ctx_insert(ctx, intern(NKind::Imp, ante.a, intern(NKind::Imp, ante.b, n.b)));
                    changed = true;
                    bump();
                    break;
                } else if (ante.kind == NKind::Or) {
                    // (c | d) -> b  ~>  c -> b, d -> b
                    ctx_erase(ctx, id);
                    ctx_insert(ctx, intern(NKind::Imp, ante.a, n.b));
                    ctx_insert(ctx, intern(NKind::Imp, ante.b, n.b));
                    changed = true;
                    bump();
                    break;
                }
            }
        }

        const SequentKey key{ctx, goal};
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        const bool result = prove_saturated(key.ctx, goal);
        memo.emplace(key, result);
        return result;
    }

    bool prove_saturated(const Context& ctx, std::int32_t goal) {
        const Node g = nodes[goal];

        if (g.kind == NKind::Atom && ctx_contains(ctx, goal))
            return true;

        // Split on a context disjunction (invertible).
        for (std::int32_t id : ctx) {
            const Node n = nodes[id];
            if (n.kind == NKind::Or) {
                Context left = ctx;
                ctx_erase(left, id);
                ctx_insert(left, n.a);
                if (!prove(std::move(left), goal))
                    return false;
                Context right = ctx;
                ctx_erase(right, id);
                ctx_insert(right, n.b);
                return prove(std::move(right), goal);
            }
        }

        if (g.kind == NKind::Imp) {
            Context next = ctx;
            ctx_insert(next, g.a);
            return prove(std::move(next), g.b);
        }

        if (g.kind == NKind::And)
            return prove(ctx, g.a) && prove(ctx, g.b);

        if (g.kind == NKind::Or) {
            if (prove(ctx, g.a) || prove(ctx, g.b))
                return true;
        }

        // Implication-implication antecedents: from (c -> d) -> b derive the
        // goal via the premises  ctx, d -> b  =>  c -> d  and  ctx, b  =>  goal.
        for (std::int32_t id : ctx) {
            const Node n = nodes[id];
            if (n.kind != NKind::Imp)
                continue;
            const Node ante = nodes[n.a];
            if (ante.kind != NKind::Imp)
                continue;
            Context premise1 = ctx;
            ctx_erase(premise1, id);
            ctx_insert(premise1, intern(NKind::Imp, ante.b, n.b));
            if (!prove(std::move(premise1), n.a))
                continue;
            Context premise2 = ctx;
            ctx_erase(premise2, id);
            ctx_insert(premise2, n.b);
            if (prove(std::move(premise2), goal))
                return true;
        }
        return false;
    }
};

Prover::Prover(const AxiomBase& base, ProverOptions options)
    : impl_(std::make_unique<Impl>(options.step_budget)) {
    for (const Formula& f : base)
        ctx_insert(impl_->base_ctx, impl_->add(f));
}

Prover::~Prover() = default;
Prover::Prover(Prover&&) noexcept = default;
Prover& Prover::operator=(Prover&&) noexcept = default;

bool Prover::derives(const Formula& goal) {
    impl_->steps = 0;
    return impl_->prove(impl_->base_ctx, impl_->add(goal));
}

Verdict Prover::try_derive(const Formula& goal) {
    try {
        return derives(goal) ? Verdict::Derivable : Verdict::NotDerivable;
    } catch (const BudgetExceededError&) {
        return Verdict::BudgetExceeded;
    }
}

bool derives(const AxiomBase& base, const Formula& goal, const ProverOptions& options) {
    Prover prover(base, options);
    return prover.derives(goal);
}

Verdict try_derives(const AxiomBase& base, const Formula& goal, const ProverOptions& options) {
    Prover prover(base, options);
    return prover.try_derive(goal);
}

std::vector<bool> derives_all(const AxiomBase& base, const std::vector<Formula>& goals,
                              const ProverOptions& options) {
    Prover prover(base, options);
    std::vector<bool> out;
    out.reserve(goals.size());
    for (const Formula& goal : goals)
        out.push_back(prover.derives(goal));
    return out;
}

std::vector<Formula> hilbert_axiom_instances(const Formula& f, const Formula& g,
                                             const Formula& h) {
    using F = Formula;
    return {
        F::implies(f, F::implies(g, f)),
        F::implies(F::implies(f, F::implies(g, h)),
                   F::implies(F::implies(f, g), F::implies(f, h))),
        F::implies(F::conj(f, g), f),
        F::implies(F::conj(f, g), g),
        F::implies(f, F::implies(g, F::conj(f, g))),
        F::implies(f, F::disj(f, g)),
        F::implies(g, F::disj(f, g)),
        F::implies(F::implies(f, g),
                   F::implies(F::implies(h, g), F::implies(F::disj(f, h), g))),
        F::implies(F::falsum(), f),
    };
}

} // namespace sppkit
