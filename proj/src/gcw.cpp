#include "bredon/gcw.hpp"

#include <algorithm>
#include <map>

#include "bredon/error.hpp"
#include "bredon/functor_algebra.hpp"
#include "bredon/homology.hpp"

namespace bredon {

namespace {

/// Chain on translates of orbit cells: (cell, least element of g G_cell) -> coefficient.
using OrbitChain = std::map<std::pair<std::size_t, int>, long long>;

int coset_min(const FiniteGroup& g, int x, const Subgroup& k)
{
    int best = x;
    for (int y : k.members())
        best = std::min(best, g.mul(x, y));
    return best;
}

void add_term(OrbitChain& chain, const FiniteGroup& g, const std::vector<OrbitCell>& lower, long long c, int x,
              std::size_t cell)
{
    auto key = std::make_pair(cell, coset_min(g, x, lower[cell].stabilizer));
    auto& v = chain[key];
    v += c;
    if (v == 0)
        chain.erase(key);
}

/// Image of terms (translated by x, scaled by c) under a cellwise map `image[cell]` into `lower`.
void add_image(OrbitChain& chain, const FiniteGroup& g, const std::vector<OrbitCell>& lower,
               const std::vector<CellTerm>& image, long long c, int x)
{
    for (const auto& t : image)
        add_term(chain, g, lower, c * t.coeff, g.mul(x, t.g), t.cell);
}

void check_fixed(const FiniteGroup& g, const OrbitCell& sigma, const std::vector<OrbitCell>& lower,
                 const OrbitChain& chain, const std::string& what)
{
    for (const auto& [key, c] : chain) {
        const auto& [cell, x] = key;
        const Subgroup& k = lower[cell].stabilizer;
        int xi = g.inv(x);
        for (int h : sigma.stabilizer.members())
            if (!k.contains(g.mul(g.mul(xi, h), x)))
                throw Error(ErrorKind::InvalidArgument, what + " of cell " + sigma.id + " contains a translate of " +
                                                            lower[cell].id + " not fixed by its stabilizer");
    }
}

OrbitChain boundary_chain(const EquivariantCWData& x, std::size_t n, std::size_t s)
{
    OrbitChain chain;
    for (const auto& t : x.cells[n][s].boundary)
        add_term(chain, *x.group, x.cells[n - 1], t.coeff, t.g, t.cell);
    return chain;
}

SparseMatrix dense_to_sparse(const IntMatrix& m)
{
    return SparseMatrix::from_dense(m);
}

} // namespace

void EquivariantCWData::validate() const
{
    const FiniteGroup& g = *group;
    for (std::size_t n = 0; n < cells.size(); ++n)
        for (std::size_t s = 0; s < cells[n].size(); ++s) {
            const OrbitCell& sigma = cells[n][s];
            if (sigma.stabilizer.parent() != group && sigma.stabilizer.group().elements() != g.elements())
                throw Error(ErrorKind::InvalidArgument, "stabilizer of cell " + sigma.id + " is in another group");
            if (n == 0) {
                if (!sigma.boundary.empty())
                    throw Error(ErrorKind::InvalidArgument, "0-cell " + sigma.id + " has a boundary");
                continue;
            }
            for (const auto& t : sigma.boundary)
                if (t.cell >= cells[n - 1].size() || t.g < 0 || t.g >= g.order())
                    throw Error(ErrorKind::InvalidArgument, "boundary term of cell " + sigma.id + " out of range");
            OrbitChain d = boundary_chain(*this, n, s);
            check_fixed(g, sigma, cells[n - 1], d, "boundary");
            if (n >= 2) {
                OrbitChain dd;
                for (const auto& [key, c] : d)
                    add_image(dd, g, cells[n - 2], cells[n - 1][key.first].boundary, c, key.second);
                if (!dd.empty())
                    throw Error(ErrorKind::BoundarySquareNonzero, "d d of cell " + sigma.id + " is nonzero");
            }
        }
}

QuotientCWData direct_quotient(const EquivariantCWData& x)
{
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= x.dimension(); ++n)
        ranks.push_back(x.cell_count(n));
    if (ranks.empty())
        ranks.push_back(0);
    QuotientCWData q(ranks);
    for (std::size_t n = 1; n < x.cells.size(); ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        for (std::size_t s = 0; s < ranks[n]; ++s) {
            SparseMatrix::Column col;
            for (const auto& t : x.cells[n][s].boundary)
                col.push_back({t.cell, Integer(t.coeff)});
            d.set_column(s, std::move(col));
        }
        q.set_boundary(n, std::move(d));
    }
    return q;
}

FreeOrbitComplex cellular_chains(const EquivariantCWData& x, const CategoryPtr& cat)
{
    x.validate();
    FreeOrbitComplex c(cat);
    std::vector<std::size_t> prev;
    for (std::size_t n = 0; n < x.cells.size(); ++n) {
        std::vector<std::size_t> objects;
        for (const auto& sigma : x.cells[n])
            objects.push_back(cat->object_of(sigma.stabilizer));
        std::vector<std::vector<FreeRecord>> bnd(objects.size());
        if (n > 0)
            for (std::size_t s = 0; s < objects.size(); ++s)
                for (const auto& t : x.cells[n][s].boundary)
                    bnd[s].push_back({t.coeff, t.cell, cat->make(objects[s], prev[t.cell], t.g).id});
        c.add_degree(objects, std::move(bnd));
        prev = std::move(objects);
    }
    c.validate();
    return c;
}

bool FixedPointAcyclicity::contractible_fixed_sets() const
{
    for (const auto& h : augmented_homology)
        for (const auto& a : h)
            if (!a.is_zero())
                return false;
    return true;
}

FixedPointAcyclicity fixed_point_acyclicity(const FreeOrbitComplex& chains)
{
    FixedPointAcyclicity out;
    const std::size_t dim = chains.top();
    out.acyclic_below = dim + 1;
    for (std::size_t o = 0; o < chains.category().object_count(); ++o) {
        auto h = chains.evaluate_augmented(o).homology_all();
        for (std::size_t k = 0; k < h.size(); ++k)
            if (!h[k].is_zero()) {
                // index k is degree k - 1: vanishing holds in degrees < k - 1
                out.acyclic_below = std::min(out.acyclic_below, k == 0 ? std::size_t{0} : k - 1);
                break;
            }
        out.augmented_homology.push_back(std::move(h));
    }
    return out;
}

QuotientComparison quotient_complex(const EquivariantCWData& x, const CategoryPtr& cat)
{
    QuotientComparison out;
    out.direct = direct_quotient(x);
    FreeOrbitComplex chains = cellular_chains(x, cat);
    BredonModule z = BredonModule::trivial(cat, Variance::Left);

    std::vector<BredonModule> modules;
    std::vector<TensorOverFamily> tensors;
    std::vector<IntMatrix> to_orbit_basis; // inverse of the orbit-generator matrix
    std::vector<IntMatrix> from_orbit_basis;
    for (std::size_t n = 0; n <= chains.top(); ++n)
        modules.push_back(chains.module(n));
    for (std::size_t n = 0; n <= chains.top(); ++n) {
        const BredonModule& m = modules[n];
        tensors.push_back(tensor_over_family(m, z));
        const TensorOverFamily& t = tensors.back();
        const std::size_t cells = chains.cell_count(n);
        IntMatrix gens(t.generator_count(), cells);
        for (std::size_t s = 0; s < cells; ++s) {
            std::size_t o = chains.cells(n)[s];
            std::size_t point = m.gset()->orbit_rep(s);
            const auto& basis = m.basis_points(o);
            std::size_t pos = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), point) - basis.begin());
            gens(t.generator(o, pos, 0), s) = 1;
        }
        IntMatrix b = t.coker.projection() * gens;
        bool ok = t.invariants() == AbGroupInvariants::from_cyclic(cells, {}) && b.rows() == b.cols() &&
                  (cells == 0 || is_unimodular(b));
        if (!ok) {
            out.bases_unimodular = false;
            return out;
        }
        SmithForm snf = smith_normal_form(b);
        to_orbit_basis.push_back(snf.V * snf.U);
        from_orbit_basis.push_back(std::move(b));
    }

    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= chains.top(); ++n)
        ranks.push_back(chains.cell_count(n));
    out.via_tensor = QuotientCWData(ranks);
    for (std::size_t n = 1; n <= chains.top(); ++n) {
        BredonMorphism d = chains.differential(n, modules[n], modules[n - 1]);
        IntMatrix g = tensor_generator_map(d, tensors[n], tensors[n - 1]);
        IntMatrix free = induced_on_free_parts(tensors[n], tensors[n - 1], g);
        out.via_tensor.set_boundary(n, dense_to_sparse(to_orbit_basis[n - 1] * free * from_orbit_basis[n]));
    }
    out.matrices_agree = out.direct.ranks() == out.via_tensor.ranks();
    for (std::size_t n = 1; n <= chains.top() && out.matrices_agree; ++n)
        out.matrices_agree = out.direct.boundary(n) == out.via_tensor.boundary(n);
    return out;
}

GeometricBoundReport geometric_lower_bound_report(const EquivariantCWData& x, const CategoryPtr& cat,
                                                  std::size_t degree)
{
    FreeOrbitComplex chains = cellular_chains(x, cat);
    FixedPointAcyclicity acyc = fixed_point_acyclicity(chains);
    if (acyc.acyclic_below == 0)
        throw Error(ErrorKind::InvalidArgument, "some fixed set X^H is empty or disconnected; not a model");
    GeometricBoundReport rep;
    rep.valid_degree = acyc.contractible_fixed_sets() ? degree : std::min(degree, acyc.acyclic_below - 1);

    QuotientCWData q = direct_quotient(x);
    auto hom = q.homology_all();
    CochainComplexZ co(q.ranks());
    for (std::size_t n = 1; n <= q.top(); ++n)
        co.set_coboundary(n, q.boundary(n).transpose());
    auto cohom = co.cohomology_all();
    for (std::size_t n = 0; n <= rep.valid_degree; ++n) {
        rep.quotient_homology.push_back(n < hom.size() ? hom[n] : AbGroupInvariants{});
        rep.quotient_cohomology.push_back(n < cohom.size() ? cohom[n] : AbGroupInvariants{});
        if (!rep.quotient_homology.back().is_zero())
            rep.hd_lower = n;
        if (!rep.quotient_cohomology.back().is_zero())
            rep.cd_lower = n;
    }
    rep.cd_lower = std::max(rep.cd_lower, rep.hd_lower);
    if (cat->family().semi_full()) {
        rep.bredon_homology = bredon_homology(BredonModule::trivial(cat, Variance::Left), rep.valid_degree).groups;
        rep.cross_checked = true;
        rep.agrees = rep.bredon_homology == rep.quotient_homology;
    }
    return rep;
}

QuotientCWData telescope(const QuotientCWData& x, const std::vector<IntMatrix>& f, std::size_t window)
{
    const std::size_t top = x.top();
    if (f.size() != top + 1)
        throw Error(ErrorKind::InvalidArgument, "chain map needs one matrix per degree");
    for (std::size_t n = 0; n <= top; ++n)
        if (f[n].rows() != x.rank(n) || f[n].cols() != x.rank(n))
            throw Error(ErrorKind::InvalidArgument, "chain map matrix in degree " + std::to_string(n) + " has wrong shape");
    std::vector<IntMatrix> d(top + 1);
    for (std::size_t n = 1; n <= top; ++n) {
        d[n] = x.boundary(n).to_dense();
        if (!(d[n] * f[n] == f[n - 1] * d[n]))
            throw Error(ErrorKind::NotChainMap, "d f != f d in degree " + std::to_string(n));
    }

    const std::size_t stages = 2 * window + 1;
    auto rank = [&](std::size_t n) -> std::size_t { return n <= top ? x.rank(n) : 0; };
    auto prism_rank = [&](std::size_t n) -> std::size_t { return n >= 1 ? rank(n - 1) : 0; };
    auto stage_off = [&](std::size_t n, std::size_t k) { return k * (rank(n) + prism_rank(n)); };
    auto prism_off = [&](std::size_t n, std::size_t k) { return stage_off(n, k) + rank(n); };

    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= top + 1; ++n)
        ranks.push_back(stages * rank(n) + (stages - 1) * prism_rank(n));
    QuotientCWData out(ranks);
    for (std::size_t n = 1; n <= top + 1; ++n) {
        SparseMatrix m(ranks[n - 1], ranks[n]);
        for (std::size_t k = 0; k < stages; ++k) {
            for (std::size_t e = 0; e < rank(n); ++e) {
                SparseMatrix::Column col;
                for (std::size_t r = 0; r < rank(n - 1); ++r)
                    if (d[n](r, e) != 0)
                        col.push_back({stage_off(n - 1, k) + r, d[n](r, e)});
                m.set_column(stage_off(n, k) + e, std::move(col));
            }
            if (k + 1 == stages)
                continue;
            const std::size_t p = n - 1;
            const long long sign = p % 2 == 0 ? 1 : -1;
            for (std::size_t e = 0; e < rank(p); ++e) {
                SparseMatrix::Column col;
                if (p >= 1)
                    for (std::size_t r = 0; r < rank(p - 1); ++r)
                        if (d[p](r, e) != 0)
                            col.push_back({prism_off(p, k) + r, d[p](r, e)});
                for (std::size_t r = 0; r < rank(p); ++r)
                    if (f[p](r, e) != 0)
                        col.push_back({stage_off(p, k + 1) + r, f[p](r, e) * sign});
                col.push_back({stage_off(p, k) + e, Integer(-sign)});
                m.set_column(prism_off(n, k) + e, std::move(col));
            }
        }
        out.set_boundary(n, std::move(m));
    }
    return out;
}

EquivariantCWData telescope(const EquivariantCWData& x, const EquivariantChainMap& f, std::size_t window)
{
    x.validate();
    const FiniteGroup& g = *x.group;
    const std::size_t top = x.dimension();
    if (f.size() != top + 1)
        throw Error(ErrorKind::InvalidArgument, "chain map needs one list per degree");
    for (std::size_t n = 0; n <= top; ++n) {
        if (f[n].size() != x.cell_count(n))
            throw Error(ErrorKind::InvalidArgument, "chain map needs one image per cell");
        for (std::size_t s = 0; s < x.cell_count(n); ++s) {
            OrbitChain image;
            add_image(image, g, x.cells[n], f[n][s], 1, 0);
            check_fixed(g, x.cells[n][s], x.cells[n], image, "image");
            if (n == 0)
                continue;
            OrbitChain df, fd;
            for (const auto& [key, c] : image)
                add_image(df, g, x.cells[n - 1], x.cells[n][key.first].boundary, c, key.second);
            for (const auto& [key, c] : boundary_chain(x, n, s))
                add_image(fd, g, x.cells[n - 1], f[n - 1][key.first], c, key.second);
            if (df != fd)
                throw Error(ErrorKind::NotChainMap, "d f != f d on cell " + x.cells[n][s].id);
        }
    }

    const std::size_t stages = 2 * window + 1;
    auto rank = [&](std::size_t n) -> std::size_t { return n <= top ? x.cell_count(n) : 0; };
    auto prism_rank = [&](std::size_t n) -> std::size_t { return n >= 1 ? rank(n - 1) : 0; };
    auto stage_off = [&](std::size_t n, std::size_t k) { return k * (rank(n) + prism_rank(n)); };
    auto prism_off = [&](std::size_t n, std::size_t k) { return stage_off(n, k) + rank(n); };
    auto stage_name = [&](std::size_t k) { return std::to_string(static_cast<long long>(k) - static_cast<long long>(window)); };

    EquivariantCWData out;
    out.group = x.group;
    out.cells.resize(top + 2);
    for (std::size_t n = 0; n <= top + 1; ++n) {
        for (std::size_t k = 0; k < stages; ++k) {
            for (std::size_t e = 0; e < rank(n); ++e) {
                const OrbitCell& c = x.cells[n][e];
                OrbitCell cell{c.id + "@" + stage_name(k), c.stabilizer, {}};
                for (const auto& t : c.boundary)
                    cell.boundary.push_back({t.coeff, t.g, stage_off(n - 1, k) + t.cell});
                out.cells[n].push_back(std::move(cell));
            }
            if (k + 1 == stages)
                continue;
            const std::size_t p = n - 1;
            const long long sign = p % 2 == 0 ? 1 : -1;
            for (std::size_t e = 0; e < prism_rank(n); ++e) {
                const OrbitCell& c = x.cells[p][e];
                OrbitCell cell{c.id + "xI@" + stage_name(k), c.stabilizer, {}};
                for (const auto& t : c.boundary)
                    cell.boundary.push_back({t.coeff, t.g, prism_off(p, k) + t.cell});
                for (const auto& t : f[p][e])
                    cell.boundary.push_back({sign * t.coeff, t.g, stage_off(p, k + 1) + t.cell});
                cell.boundary.push_back({-sign, 0, stage_off(p, k) + e});
                out.cells[n].push_back(std::move(cell));
            }
        }
    }
    out.validate();
    return out;
}

QuotientCWData jpl_attach(const QuotientCWData& q, const AttachmentSpec& spec)
{
    const std::size_t r1 = q.top() >= 1 ? q.rank(1) : 0;
    std::vector<std::vector<long long>> cycles = spec.cycles;
    if (cycles.empty()) {
        if (spec.orientable > 0 && r1 == 0)
            throw Error(ErrorKind::InvalidArgument, "the base has no 1-cells to attach along");
        std::vector<long long> unit(r1, 0);
        if (r1 > 0)
            unit[0] = 1;
        cycles.assign(spec.orientable, unit);
    }
    if (cycles.size() != spec.orientable)
        throw Error(ErrorKind::InvalidArgument, "need one attaching cycle per orientable class");
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].size() != r1)
            throw Error(ErrorKind::InvalidArgument, "attaching cycle " + std::to_string(i) + " has wrong length");
        if (q.top() >= 1) {
            std::vector<Integer> image(q.rank(0), 0);
            const SparseMatrix& d1 = q.boundary(1);
            for (std::size_t c = 0; c < r1; ++c)
                for (const auto& e : d1.column(c))
                    image[e.row] += e.value * cycles[i][c];
            for (const auto& v : image)
                if (v != 0)
                    throw Error(ErrorKind::NotACycle, "attaching cycle " + std::to_string(i) + " is not a cycle");
        }
    }
    if (spec.orientable == 0)
        return q;

    std::vector<std::size_t> ranks = q.ranks();
    while (ranks.size() < 3)
        ranks.push_back(0);
    const std::size_t old2 = ranks[2];
    ranks[2] += spec.orientable;
    QuotientCWData out(ranks);
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        if (n <= q.top()) {
            const SparseMatrix& old = q.boundary(n);
            for (std::size_t c = 0; c < old.cols(); ++c)
                d.set_column(c, old.column(c));
        }
        if (n == 2)
            for (std::size_t i = 0; i < spec.orientable; ++i) {
                SparseMatrix::Column col;
                for (std::size_t c = 0; c < r1; ++c)
                    if (cycles[i][c] != 0)
                        col.push_back({c, Integer(cycles[i][c])});
                d.set_column(old2 + i, std::move(col));
            }
        out.set_boundary(n, std::move(d));
    }
    return out;
}

QuotientCWData point_quotient()
{
    return QuotientCWData({1});
}

QuotientCWData loop_quotient()
{
    QuotientCWData q({1, 1});
    q.set_boundary(1, SparseMatrix(1, 1));
    return q;
}

QuotientCWData bs1m_quotient(std::size_t k, const std::vector<long long>& degrees)
{
    if (!degrees.empty() && degrees.size() != k)
        throw Error(ErrorKind::InvalidArgument, "need one degree per attached cell");
    AttachmentSpec spec;
    spec.orientable = k;
    for (std::size_t i = 0; i < k; ++i)
        spec.cycles.push_back({degrees.empty() ? 1 : degrees[i]});
    return jpl_attach(loop_quotient(), spec);
}

QuotientCWData z2_join_quotient(std::size_t m)
{
    if (m == 0)
        throw Error(ErrorKind::InvalidArgument, "the join model needs at least one piece");
    // dimension 0: v_0..v_m; dimension 1: e_0..e_m then v_i*v_{i+1};
    // dimension 2: v_i*e_{i+1}, e_i*v_{i+1} per piece; dimension 3: e_i*e_{i+1}
    QuotientCWData q({m + 1, 2 * m + 1, 2 * m, m});
    SparseMatrix d1(m + 1, 2 * m + 1), d2(2 * m + 1, 2 * m), d3(2 * m, m);
    for (std::size_t i = 0; i < m; ++i) {
        d1.set_column(m + 1 + i, {{i, Integer(-1)}, {i + 1, Integer(1)}});
        d2.set_column(2 * i, {{i + 1, Integer(1)}}); // d(v_i*e_{i+1}) = e_{i+1} - v_i*d e_{i+1}
        d2.set_column(2 * i + 1, {{i, Integer(1)}}); // d(e_i*v_{i+1}) = d e_i*v_{i+1} + e_i
    }
    q.set_boundary(1, std::move(d1));
    q.set_boundary(2, std::move(d2));
    q.set_boundary(3, std::move(d3));
    return q;
}

EquivariantCWData standard_model(const CategoryPtr& cat, std::size_t dimension, ResolutionBase base)
{
    ResolutionOptions opts;
    opts.base = base;
    StandardResolution r = StandardResolution::build(cat, dimension, opts);
    const FreeOrbitComplex& c = r.complex();
    EquivariantCWData x;
    x.group = cat->group();
    x.cells.resize(dimension + 1);
    for (std::size_t n = 0; n <= dimension; ++n)
        for (std::size_t s = 0; s < c.cell_count(n); ++s) {
            OrbitCell cell;
            cell.id = "d" + std::to_string(n) + "_" + std::to_string(s);
            cell.stabilizer = cat->subgroup(c.cells(n)[s]);
            if (n > 0)
                for (const auto& rec : c.boundary(n, s))
                    cell.boundary.push_back({rec.coeff, cat->morphism(rec.morphism).rep, rec.target});
            x.cells[n].push_back(std::move(cell));
        }
    return x;
}

} // namespace bredon
