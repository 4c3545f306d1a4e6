#include "bredon/functor_algebra.hpp"

#include <algorithm>

#include "bredon/error.hpp"

namespace bredon {

Cokernel Cokernel::of(const IntMatrix& q)
{
    Cokernel c;
    c.gens = q.rows();
    if (q.cols() == 0) {
        c.snf.U = c.snf.U_inv = IntMatrix::identity(q.rows());
        c.snf.V = c.snf.V_inv = IntMatrix(0, 0);
        c.snf.D = q;
        c.snf.rank = 0;
    } else {
        c.snf = smith_normal_form(q);
    }
    c.invariants = AbGroupInvariants::from_cyclic(c.gens - c.snf.rank, c.snf.diagonal());
    return c;
}

IntMatrix Cokernel::projection() const
{
    return snf.U.select_rows(snf.rank, gens);
}

IntMatrix Cokernel::section() const
{
    return snf.U_inv.select_cols(snf.rank, gens);
}

std::vector<Integer> Cokernel::classify(const std::vector<Integer>& v) const
{
    std::vector<Integer> torsion;
    std::vector<Integer> free;
    for (std::size_t i = 0; i < gens; ++i) {
        Integer y = 0;
        for (std::size_t k = 0; k < gens; ++k)
            if (v[k] != 0)
                y += snf.U(i, k) * v[k];
        if (i < snf.rank) {
            const Integer& d = snf.D(i, i);
            if (d != 1) {
                Integer r = y % d;
                if (r < 0)
                    r += d;
                torsion.push_back(r);
            }
        } else {
            free.push_back(y);
        }
    }
    torsion.insert(torsion.end(), free.begin(), free.end());
    return torsion;
}

TensorOverFamily tensor_over_family(const BredonModule& m, const BredonModule& n)
{
    if (m.variance() != Variance::Right || n.variance() != Variance::Left)
        throw Error(ErrorKind::VarianceMismatch, "tensor over the family needs a right and a left module");
    if (&m.category() != &n.category())
        throw Error(ErrorKind::InvalidArgument, "modules live over different orbit categories");
    const OrbitCategory& c = m.category();
    TensorOverFamily t;
    std::size_t gens = 0;
    for (std::size_t o = 0; o < c.object_count(); ++o) {
        t.offsets.push_back(gens);
        t.m_ranks.push_back(m.rank(o));
        t.n_ranks.push_back(n.rank(o));
        gens += m.rank(o) * n.rank(o);
    }
    std::vector<SparseMatrix::Column> rels;
    for (const auto& f : c.morphisms()) {
        if (f.source == f.target && f.coset == 0)
            continue; // identity
        const IntMatrix& mf = m.act(f); // r_H x r_K
        const IntMatrix& nf = n.act(f); // s_K x s_H
        const std::size_t h = f.source;
        const std::size_t k = f.target;
        // f^*(m) (x) n - m (x) f_*(n) for m in M(G/K), n in N(G/H)
        for (std::size_t a = 0; a < m.rank(k); ++a)
            for (std::size_t b = 0; b < n.rank(h); ++b) {
                SparseMatrix::Column col;
                for (std::size_t i = 0; i < m.rank(h); ++i)
                    if (mf(i, a) != 0)
                        col.push_back({t.generator(h, i, b), mf(i, a)});
                for (std::size_t j = 0; j < n.rank(k); ++j)
                    if (nf(j, b) != 0)
                        col.push_back({t.generator(k, a, j), -nf(j, b)});
                normalize_column(col);
                if (!col.empty())
                    rels.push_back(std::move(col));
            }
    }
    t.relations = IntMatrix(gens, rels.size());
    for (std::size_t j = 0; j < rels.size(); ++j)
        for (const auto& e : rels[j])
            t.relations(e.row, j) = e.value;
    t.coker = Cokernel::of(t.relations);
    return t;
}

IntMatrix tensor_generator_map(const BredonMorphism& phi, const TensorOverFamily& src, const TensorOverFamily& dst)
{
    IntMatrix out(dst.generator_count(), src.generator_count());
    for (std::size_t o = 0; o < src.offsets.size(); ++o) {
        const IntMatrix& p = phi.components[o]; // dst m-rank x src m-rank
        for (std::size_t a = 0; a < src.m_ranks[o]; ++a)
            for (std::size_t a2 = 0; a2 < dst.m_ranks[o]; ++a2) {
                if (p(a2, a) == 0)
                    continue;
                for (std::size_t b = 0; b < src.n_ranks[o]; ++b)
                    out(dst.generator(o, a2, b), src.generator(o, a, b)) += p(a2, a);
            }
    }
    return out;
}

IntMatrix induced_on_free_parts(const TensorOverFamily& src, const TensorOverFamily& dst, const IntMatrix& gen_map)
{
    return dst.coker.projection() * gen_map * src.coker.section();
}

IntMatrix NaturalTransformations::component(std::size_t j, std::size_t object) const
{
    IntMatrix eta(n_ranks[object], m_ranks[object]);
    for (std::size_t i = 0; i < eta.rows(); ++i)
        for (std::size_t k = 0; k < eta.cols(); ++k)
            eta(i, k) = basis(offsets[object] + i * m_ranks[object] + k, j);
    return eta;
}

std::vector<Integer> NaturalTransformations::coordinates_of(const std::vector<Integer>& eta) const
{
    std::vector<Integer> y(dimension());
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t k = 0; k < eta.size(); ++k)
            if (eta[k] != 0)
                y[i] += coordinates(i, k) * eta[k];
    // basis * y must reproduce eta, otherwise eta was not natural
    for (std::size_t k = 0; k < eta.size(); ++k) {
        Integer s = 0;
        for (std::size_t i = 0; i < dimension(); ++i)
            if (y[i] != 0)
                s += basis(k, i) * y[i];
        if (s != eta[k])
            throw Error(ErrorKind::InvalidArgument, "vector is not a natural transformation");
    }
    return y;
}

NaturalTransformations mor_modules(const BredonModule& m, const BredonModule& n)
{
    if (m.variance() != n.variance())
        throw Error(ErrorKind::VarianceMismatch, "mor between modules of different variance");
    const OrbitCategory& c = m.category();
    NaturalTransformations r;
    std::size_t unknowns = 0;
    for (std::size_t o = 0; o < c.object_count(); ++o) {
        r.offsets.push_back(unknowns);
        r.m_ranks.push_back(m.rank(o));
        r.n_ranks.push_back(n.rank(o));
        unknowns += m.rank(o) * n.rank(o);
    }
    auto var = [&](std::size_t o, std::size_t i, std::size_t j) { return r.offsets[o] + i * m.rank(o) + j; };

    std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;
    const bool right = m.variance() == Variance::Right;
    for (const auto& f : c.morphisms()) {
        if (f.source == f.target && f.coset == 0)
            continue;
        const IntMatrix& mf = m.act(f);
        const IntMatrix& nf = n.act(f);
        // right: N(f) eta_K = eta_H M(f); left: N(f) eta_H = eta_K M(f)
        const std::size_t lo = right ? f.target : f.source; // object of eta on the N(f) side
        const std::size_t ro = right ? f.source : f.target; // object of eta on the M(f) side
        for (std::size_t i = 0; i < nf.rows(); ++i)
            for (std::size_t j = 0; j < mf.cols(); ++j) {
                std::vector<std::pair<std::size_t, Integer>> row;
                for (std::size_t k = 0; k < nf.cols(); ++k)
                    if (nf(i, k) != 0)
                        row.emplace_back(var(lo, k, j), nf(i, k));
                for (std::size_t l = 0; l < mf.rows(); ++l)
                    if (mf(l, j) != 0)
                        row.emplace_back(var(ro, i, l), -mf(l, j));
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
    }
    IntMatrix constraints(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, v] : rows[i])
            constraints(i, col) += v;
    if (rows.empty()) {
        r.basis = IntMatrix::identity(unknowns);
        r.coordinates = IntMatrix::identity(unknowns);
    } else {
        SmithForm s = smith_normal_form(constraints);
        r.basis = s.V.select_cols(s.rank, unknowns);
        r.coordinates = s.V_inv.select_rows(s.rank, unknowns);
    }
    r.invariants = AbGroupInvariants::from_cyclic(r.basis.cols(), {});
    return r;
}

BredonModule tensor_over_Z(const BredonModule& m, const BredonModule& n)
{
    if (m.variance() != n.variance())
        throw Error(ErrorKind::VarianceMismatch, "tensor over Z needs modules of equal variance");
    const OrbitCategory& c = m.category();
    std::vector<std::size_t> ranks;
    for (std::size_t o = 0; o < c.object_count(); ++o)
        ranks.push_back(m.rank(o) * n.rank(o));
    std::vector<IntMatrix> actions;
    for (const auto& f : c.morphisms())
        actions.push_back(kronecker(m.act(f), n.act(f)));
    return BredonModule::from_table(m.category_ptr(), m.variance(), std::move(ranks), std::move(actions));
}

SubgroupContext restriction_context(const CategoryPtr& parent, const Subgroup& k)
{
    const Family& f = parent->family();
    SubgroupContext ctx;
    ctx.parent = parent;
    ctx.embedding = embed_subgroup(k);
    std::vector<Subgroup> seeds;
    for (const auto& h : f.members()) {
        Subgroup hk = intersect(h, k);
        if (!f.contains(hk))
            throw Error(ErrorKind::FamilyNotCompatible,
                        "intersection " + hk.describe() + " of a family member with K is not in the family");
        seeds.push_back(ctx.embedding.pull_back(hk));
    }
    ctx.sub = OrbitCategory::build(Family::closure_of(ctx.embedding.group, seeds));
    for (std::size_t o = 0; o < ctx.sub->object_count(); ++o)
        ctx.object_in_parent.push_back(parent->object_of(ctx.embedding.push_forward(ctx.sub->subgroup(o))));
    for (const auto& mo : ctx.sub->morphisms()) {
        int x = ctx.embedding.to_parent[static_cast<std::size_t>(mo.rep)];
        ctx.morphism_in_parent.push_back(
            parent->make(ctx.object_in_parent[mo.source], ctx.object_in_parent[mo.target], x).id);
    }
    return ctx;
}

BredonModule restrict_IK(const BredonModule& m, const SubgroupContext& ctx)
{
    if (&m.category() != ctx.parent.get())
        throw Error(ErrorKind::InvalidArgument, "module is not over the parent orbit category");
    std::vector<std::size_t> ranks;
    for (std::size_t o = 0; o < ctx.sub->object_count(); ++o)
        ranks.push_back(m.rank(ctx.object_in_parent[o]));
    std::vector<IntMatrix> actions;
    for (std::size_t id = 0; id < ctx.sub->morphism_count(); ++id)
        actions.push_back(m.act(ctx.morphism_in_parent[id]));
    return BredonModule::from_table(ctx.sub, m.variance(), std::move(ranks), std::move(actions));
}

BredonModule induce_free_sum(const BredonModule& m, const SubgroupContext& ctx)
{
    if (!m.free_summands())
        throw Error(ErrorKind::NotFreeSum, "induction of free modules needs a module tagged as a sum of frees");
    if (&m.category() != ctx.sub.get())
        throw Error(ErrorKind::InvalidArgument, "module is not over the subgroup orbit category");
    std::vector<std::size_t> objects;
    for (auto o : *m.free_summands())
        objects.push_back(ctx.object_in_parent[o]);
    return BredonModule::free_sum(ctx.parent, objects);
}

namespace {

/// Components over the subgroup category of the map res Z[?, G/H] -> res Z[?, G/H'] given by postcomposing with phi.
BredonMorphism restricted_postcomposition(const SubgroupContext& ctx, const BredonModule& src,
                                          const BredonModule& dst, const OrbitMorphism& phi)
{
    const OrbitCategory& p = *ctx.parent;
    BredonMorphism psi;
    psi.source = &src;
    psi.target = &dst;
    for (std::size_t o = 0; o < ctx.sub->object_count(); ++o) {
        std::size_t l = ctx.object_in_parent[o];
        const auto& from = p.hom(l, phi.source);
        IntMatrix a(p.hom(l, phi.target).size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c)
            a(p.compose(phi, from[c]).position, c) = 1;
        psi.components.push_back(std::move(a));
    }
    return psi;
}

/// Same for res Z[G/H', ??] -> res Z[G/H, ??], precomposing with phi : G/H -> G/H'.
BredonMorphism restricted_precomposition(const SubgroupContext& ctx, const BredonModule& src,
                                         const BredonModule& dst, const OrbitMorphism& phi)
{
    const OrbitCategory& p = *ctx.parent;
    BredonMorphism psi;
    psi.source = &src;
    psi.target = &dst;
    for (std::size_t o = 0; o < ctx.sub->object_count(); ++o) {
        std::size_t l = ctx.object_in_parent[o];
        const auto& from = p.hom(phi.target, l);
        IntMatrix a(p.hom(phi.source, l).size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c)
            a(p.compose(from[c], phi).position, c) = 1;
        psi.components.push_back(std::move(a));
    }
    return psi;
}

/// Generator map of id_M (x) psi for left-side variation (right module fixed on the left factor).
IntMatrix tensor_generator_map_right_factor(const BredonMorphism& psi, const TensorOverFamily& src,
                                            const TensorOverFamily& dst)
{
    IntMatrix out(dst.generator_count(), src.generator_count());
    for (std::size_t o = 0; o < src.offsets.size(); ++o) {
        const IntMatrix& p = psi.components[o];
        for (std::size_t a = 0; a < src.m_ranks[o]; ++a)
            for (std::size_t b = 0; b < src.n_ranks[o]; ++b)
                for (std::size_t b2 = 0; b2 < dst.n_ranks[o]; ++b2)
                    if (p(b2, b) != 0)
                        out(dst.generator(o, a, b2), src.generator(o, a, b)) += p(b2, b);
    }
    return out;
}

void require_free_value(const TensorOverFamily& t, std::size_t object)
{
    if (!t.invariants().torsion.empty())
        throw Error(ErrorKind::NotObjectwiseFree, "induced module has value " + t.invariants().to_string() +
                                                      " at object " + std::to_string(object));
}

} // namespace

BredonModule induce_IK(const BredonModule& m, const SubgroupContext& ctx)
{
    if (&m.category() != ctx.sub.get())
        throw Error(ErrorKind::InvalidArgument, "module is not over the subgroup orbit category");
    const OrbitCategory& p = *ctx.parent;
    const std::size_t n = p.object_count();
    std::vector<BredonModule> kernels; // restricted Z[?, G/H] or Z[G/H, ?] per parent object
    std::vector<TensorOverFamily> values;
    const bool right = m.variance() == Variance::Right;
    for (std::size_t h = 0; h < n; ++h) {
        if (right) {
            kernels.push_back(restrict_IK(BredonModule::free_left(ctx.parent, h), ctx));
            values.push_back(tensor_over_family(m, kernels.back()));
        } else {
            kernels.push_back(restrict_IK(BredonModule::free_sum(ctx.parent, {h}), ctx));
            values.push_back(tensor_over_family(kernels.back(), m));
        }
        require_free_value(values.back(), h);
    }
    std::vector<std::size_t> ranks;
    for (const auto& v : values)
        ranks.push_back(v.coker.free_rank());
    std::vector<IntMatrix> actions;
    for (const auto& f : p.morphisms()) {
        if (right) {
            // G/H -> G/H' induces value(H') -> value(H)
            auto psi = restricted_precomposition(ctx, kernels[f.target], kernels[f.source], f);
            IntMatrix gen = tensor_generator_map_right_factor(psi, values[f.target], values[f.source]);
            actions.push_back(induced_on_free_parts(values[f.target], values[f.source], gen));
        } else {
            auto psi = restricted_postcomposition(ctx, kernels[f.source], kernels[f.target], f);
            IntMatrix gen = tensor_generator_map(psi, values[f.source], values[f.target]);
            actions.push_back(induced_on_free_parts(values[f.source], values[f.target], gen));
        }
    }
    return BredonModule::from_table(ctx.parent, m.variance(), std::move(ranks), std::move(actions));
}

BredonModule coinduce_IK(const BredonModule& m, const SubgroupContext& ctx)
{
    if (m.variance() != Variance::Right)
        throw Error(ErrorKind::VarianceMismatch, "coinduction is defined for right modules");
    if (&m.category() != ctx.sub.get())
        throw Error(ErrorKind::InvalidArgument, "module is not over the subgroup orbit category");
    const OrbitCategory& p = *ctx.parent;
    std::vector<BredonModule> frees;
    std::vector<NaturalTransformations> values;
    for (std::size_t h = 0; h < p.object_count(); ++h) {
        frees.push_back(restrict_IK(BredonModule::free_sum(ctx.parent, {h}), ctx));
        values.push_back(mor_modules(frees.back(), m));
    }
    std::vector<std::size_t> ranks;
    for (const auto& v : values)
        ranks.push_back(v.dimension());
    std::vector<IntMatrix> actions;
    for (const auto& f : p.morphisms()) {
        // eta in mor(res Z[?, G/H'], M) |-> eta o psi in mor(res Z[?, G/H], M)
        auto psi = restricted_postcomposition(ctx, frees[f.source], frees[f.target], f);
        const auto& src = values[f.target];
        const auto& dst = values[f.source];
        IntMatrix a(dst.dimension(), src.dimension());
        for (std::size_t j = 0; j < src.dimension(); ++j) {
            std::vector<Integer> eta(dst.unknown_count());
            for (std::size_t o = 0; o < ctx.sub->object_count(); ++o) {
                IntMatrix comp = src.component(j, o) * psi.components[o];
                for (std::size_t r = 0; r < comp.rows(); ++r)
                    for (std::size_t c = 0; c < comp.cols(); ++c)
                        eta[dst.offsets[o] + r * dst.m_ranks[o] + c] = comp(r, c);
            }
            auto y = dst.coordinates_of(eta);
            for (std::size_t i = 0; i < y.size(); ++i)
                a(i, j) = y[i];
        }
        actions.push_back(std::move(a));
    }
    return BredonModule::from_table(ctx.parent, Variance::Right, std::move(ranks), std::move(actions));
}

BredonModule pullback_along_projection(const BredonModule& m, const CategoryPtr& product_cat,
                                       const ProductGroup& pg, int factor)
{
    const OrbitCategory& c = m.category();
    const auto& proj = factor == 0 ? pg.first : pg.second;
    std::vector<std::size_t> object_map;
    for (std::size_t o = 0; o < product_cat->object_count(); ++o) {
        std::vector<int> image;
        for (int x : product_cat->subgroup(o).members())
            image.push_back(proj[static_cast<std::size_t>(x)]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        object_map.push_back(c.object_of(Subgroup(c.group(), std::move(image))));
    }
    std::vector<std::size_t> ranks;
    for (auto o : object_map)
        ranks.push_back(m.rank(o));
    std::vector<IntMatrix> actions;
    for (const auto& f : product_cat->morphisms()) {
        int x = proj[static_cast<std::size_t>(f.rep)];
        actions.push_back(m.act(c.make(object_map[f.source], object_map[f.target], x)));
    }
    return BredonModule::from_table(product_cat, m.variance(), std::move(ranks), std::move(actions));
}

} // namespace bredon
