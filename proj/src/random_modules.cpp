#include "bredon/random_modules.hpp"

#include "bredon/error.hpp"

namespace bredon {

std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng, const RandomModuleOptions& opts)
{
    IntMatrix p = IntMatrix::identity(n);
    IntMatrix q = IntMatrix::identity(n);
    if (n == 0)
        return {p, q};
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long long> mult(-opts.max_multiplier, opts.max_multiplier);
    for (std::size_t step = 0; step < opts.basis_change_steps; ++step) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) {
            // column negation: P <- P E, Q <- E Q with E = E^{-1}
            p.negate_col(a);
            q.negate_row(a);
            continue;
        }
        long long k = mult(rng);
        // P <- P (I + k e_ab) adds k * col a to col b; the inverse subtracts k * row b from row a
        p.add_col_multiple(b, a, k);
        q.add_row_multiple(a, b, -k);
    }
    return {p, q};
}

BredonModule change_basis(const BredonModule& m, const std::vector<IntMatrix>& p, const std::vector<IntMatrix>& p_inv)
{
    const OrbitCategory& c = m.category();
    std::vector<IntMatrix> actions;
    for (const auto& f : c.morphisms()) {
        if (m.variance() == Variance::Right)
            actions.push_back(p_inv[f.source] * m.act(f) * p[f.target]);
        else
            actions.push_back(p_inv[f.target] * m.act(f) * p[f.source]);
    }
    return BredonModule::from_table(m.category_ptr(), m.variance(), m.ranks(), std::move(actions));
}

BredonModule random_module(const CategoryPtr& cat, Variance v, std::mt19937_64& rng, const RandomModuleOptions& opts)
{
    const GroupPtr& g = cat->group();
    std::vector<Subgroup> pool = cat->family().members();
    pool.push_back(Subgroup::trivial(g));
    pool.push_back(Subgroup::whole(g));
    std::uniform_int_distribution<std::size_t> pick_sub(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_obj(0, cat->object_count() - 1);
    std::uniform_int_distribution<std::size_t> pick_count(1, std::max<std::size_t>(1, opts.max_summands));
    std::uniform_int_distribution<int> pick_kind(0, 2);

    auto random_gset = [&] {
        std::vector<Subgroup> stabs{pool[pick_sub(rng)]};
        if (pick_kind(rng) == 0)
            stabs.push_back(pool[pick_sub(rng)]);
        return std::make_shared<const GSet>(GSet::coset_union(g, stabs));
    };
    auto summand = [&]() -> BredonModule {
        int kind = pick_kind(rng);
        if (kind == 0)
            return BredonModule::trivial(cat, v);
        if (v == Variance::Right)
            return kind == 1 ? BredonModule::free_sum(cat, {pick_obj(rng)}) : BredonModule::free_on(cat, random_gset());
        return kind == 1 ? BredonModule::free_left(cat, pick_obj(rng)) : BredonModule::orbit_left(cat, random_gset());
    };

    BredonModule m = summand();
    for (std::size_t i = 1, n = pick_count(rng); i < n; ++i)
        m = direct_sum(m, summand());
    std::vector<IntMatrix> p, q;
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
        auto [a, b] = random_unimodular(m.rank(o), rng, opts);
        p.push_back(std::move(a));
        q.push_back(std::move(b));
    }
    return change_basis(m, p, q);
}

} // namespace bredon
