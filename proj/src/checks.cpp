#include "bredon/checks.hpp"

#include "bredon/error.hpp"

namespace bredon {

namespace {

std::size_t trivial_coset_position(const BredonModule& free, std::size_t object)
{
    const auto& pts = free.basis_points(object);
    std::size_t e = free.gset()->orbit_rep(0);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == e)
            return i;
    throw Error(ErrorKind::InvalidArgument, "trivial coset missing from fixed points");
}

bool square_unimodular(const IntMatrix& a)
{
    return a.rows() == a.cols() && (a.rows() == 0 || is_unimodular(a));
}

AbGroupInvariants torsion_free(std::size_t rank)
{
    return AbGroupInvariants::from_cyclic(rank, {});
}

} // namespace

YonedaResult yoneda_check(const BredonModule& m, std::size_t object)
{
    const CategoryPtr& cat = m.category_ptr();
    YonedaResult out;
    out.object = object;
    out.rank = m.rank(object);
    const std::size_t r = out.rank;

    BredonModule right_free = BredonModule::free_sum(cat, {object});
    BredonModule left_free = BredonModule::free_left(cat, object);
    const std::size_t e_pos = trivial_coset_position(right_free, object);
    const std::size_t id_pos = cat->identity(object).position;
    const bool right = m.variance() == Variance::Right;

    // mor(free, m), evaluated at the universal element
    NaturalTransformations nt = right ? mor_modules(right_free, m) : mor_modules(left_free, m);
    out.mor_invariants = nt.invariants;
    IntMatrix eval(r, nt.dimension());
    for (std::size_t j = 0; j < nt.dimension(); ++j) {
        IntMatrix comp = nt.component(j, object);
        for (std::size_t i = 0; i < r; ++i)
            eval(i, j) = comp(i, right ? e_pos : id_pos);
    }
    out.mor_collapses = out.mor_invariants == torsion_free(r) && square_unimodular(eval);

    // m (x) free, generated by the universal element
    TensorOverFamily t = right ? tensor_over_family(m, left_free) : tensor_over_family(right_free, m);
    out.tensor_invariants = t.invariants();
    IntMatrix incl(t.generator_count(), r);
    for (std::size_t a = 0; a < r; ++a)
        incl(right ? t.generator(object, a, id_pos) : t.generator(object, e_pos, a), a) = 1;
    IntMatrix onto = t.coker.projection() * incl;
    out.tensor_collapses = out.tensor_invariants == torsion_free(r) && square_unimodular(onto);
    return out;
}

ShapiroReport shapiro_check(const CategoryPtr& cat, const Subgroup& k, std::size_t degree, const HomologyOptions& opts)
{
    SubgroupContext ctx = restriction_context(cat, k);
    ShapiroReport rep;
    BredonModule left = BredonModule::trivial(ctx.sub, Variance::Left);
    rep.homology_sub = bredon_homology(left, degree, opts).groups;
    rep.homology_induced = bredon_homology(induce_IK(left, ctx), degree, opts).groups;
    BredonModule right = BredonModule::trivial(ctx.sub, Variance::Right);
    rep.cohomology_sub = bredon_cohomology(right, degree, opts).groups;
    rep.cohomology_coinduced = bredon_cohomology(coinduce_IK(right, ctx), degree, opts).groups;
    return rep;
}

bool KunnethReport::consistent() const
{
    for (const auto& d : degrees)
        if (!d.orders_consistent || !d.splits || !d.chain_level_matches)
            return false;
    return true;
}

KunnethReport kunneth_check(const BredonModule& n1, const BredonModule& n2, std::size_t degree,
                            const HomologyOptions& opts)
{
    if (n1.variance() != Variance::Left || n2.variance() != Variance::Left)
        throw Error(ErrorKind::VarianceMismatch, "Kunneth check takes left coefficient modules");
    const CategoryPtr& c1 = n1.category_ptr();
    const CategoryPtr& c2 = n2.category_ptr();
    ProductGroup pg = direct_product(c1->group(), c2->group());
    CategoryPtr pc = OrbitCategory::build(product_family(pg, c1->family(), c2->family()));
    BredonModule coeff =
        tensor_over_Z(pullback_along_projection(n1, pc, pg, 0), pullback_along_projection(n2, pc, pg, 1));

    ResolutionOptions ro;
    ro.base = opts.base;
    ro.max_orbits_per_degree = opts.max_orbits_per_degree;
    ro.threads = opts.threads;
    auto r1 = StandardResolution::build(c1, degree + 1, ro);
    auto r2 = StandardResolution::build(c2, degree + 1, ro);
    ChainComplexZ a = r1.complex().tensor_with(n1);
    ChainComplexZ b = r2.complex().tensor_with(n2);

    KunnethReport rep;
    rep.first = a.homology_all();
    rep.second = b.homology_all();
    rep.first.resize(degree + 1);
    rep.second.resize(degree + 1);
    auto middle = bredon_homology(coeff, degree, opts).groups;
    auto chain = tensor_complexes(a, b, degree + 1).homology_all();

    for (std::size_t n = 0; n <= degree; ++n) {
        KunnethDegree d;
        d.middle = middle[n];
        d.chain_level = chain[n];
        for (std::size_t p = 0; p <= n; ++p)
            d.left_end = direct_sum(d.left_end, tensor(rep.first[p], rep.second[n - p]));
        for (std::size_t p = 0; p + 1 <= n; ++p)
            d.right_end = direct_sum(d.right_end, tor1(rep.first[p], rep.second[n - 1 - p]));
        d.orders_consistent = d.middle.free_rank == d.left_end.free_rank + d.right_end.free_rank &&
                              d.middle.torsion_order() == d.left_end.torsion_order() * d.right_end.torsion_order();
        d.splits = d.middle == direct_sum(d.left_end, d.right_end);
        d.chain_level_matches = d.chain_level == d.middle;
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

} // namespace bredon
