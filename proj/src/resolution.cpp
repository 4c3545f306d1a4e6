#include "bredon/resolution.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

#include "bredon/error.hpp"

namespace bredon {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

void merge_records(std::vector<FreeRecord>& recs)
{
    std::sort(recs.begin(), recs.end(), [](const FreeRecord& a, const FreeRecord& b) {
        return a.target != b.target ? a.target < b.target : a.morphism < b.morphism;
    });
    std::vector<FreeRecord> out;
    for (const auto& r : recs) {
        if (!out.empty() && out.back().target == r.target && out.back().morphism == r.morphism)
            out.back().coeff += r.coeff;
        else
            out.push_back(r);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const FreeRecord& r) { return r.coeff == 0; }), out.end());
    recs = std::move(out);
}

using Entries = std::vector<std::pair<std::size_t, long long>>;

void merge_entries(Entries& e)
{
    std::sort(e.begin(), e.end());
    Entries out;
    for (const auto& x : e) {
        if (!out.empty() && out.back().first == x.first)
            out.back().second += x.second;
        else
            out.push_back(x);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& x) { return x.second == 0; }), out.end());
    e = std::move(out);
}

} // namespace

void FreeOrbitComplex::add_degree(std::vector<std::size_t> cells, std::vector<std::vector<FreeRecord>> boundary)
{
    const std::size_t n = cells_.size();
    for (auto o : cells)
        if (o >= cat_->object_count())
            throw Error(ErrorKind::InvalidArgument, "cell object out of range");
    if (n == 0) {
        boundary.clear();
    } else {
        if (boundary.size() != cells.size())
            throw Error(ErrorKind::InvalidArgument, "one boundary list per cell is required");
        for (std::size_t s = 0; s < cells.size(); ++s) {
            for (const auto& r : boundary[s]) {
                if (r.target >= cells_[n - 1].size() || r.morphism >= cat_->morphism_count())
                    throw Error(ErrorKind::InvalidArgument, "boundary record out of range");
                const auto& f = cat_->morphism(r.morphism);
                if (f.source != cells[s] || f.target != cells_[n - 1][r.target])
                    throw Error(ErrorKind::InvalidArgument, "boundary record morphism has wrong objects");
            }
            merge_records(boundary[s]);
        }
    }
    cells_.push_back(std::move(cells));
    boundary_.push_back(std::move(boundary));
}

bool FreeOrbitComplex::squares_to_zero(std::size_t n) const
{
    if (n < 2 || n > top())
        return true;
    for (std::size_t s = 0; s < cells_[n].size(); ++s) {
        std::vector<FreeRecord> acc;
        for (const auto& r1 : boundary_[n][s]) {
            const auto& f1 = cat_->morphism(r1.morphism);
            for (const auto& r2 : boundary_[n - 1][r1.target]) {
                const auto& f2 = cat_->morphism(r2.morphism);
                acc.push_back({r1.coeff * r2.coeff, r2.target, cat_->compose(f2, f1).id});
            }
        }
        merge_records(acc);
        if (!acc.empty())
            return false;
    }
    return true;
}

void FreeOrbitComplex::validate() const
{
    for (std::size_t n = 2; n <= top(); ++n)
        if (!squares_to_zero(n))
            throw Error(ErrorKind::BoundarySquareNonzero,
                        "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
}

BredonModule FreeOrbitComplex::module(std::size_t n) const
{
    return BredonModule::free_sum(cat_, cells_.at(n));
}

std::vector<std::size_t> FreeOrbitComplex::evaluated_offsets(std::size_t n, std::size_t object) const
{
    std::vector<std::size_t> off{0};
    for (auto o : cells_.at(n))
        off.push_back(off.back() + cat_->hom(object, o).size());
    return off;
}

void FreeOrbitComplex::for_each_evaluated_column(
    std::size_t n, std::size_t object,
    const std::function<void(std::size_t, const std::vector<std::pair<std::size_t, long long>>&)>& fn) const
{
    auto off = evaluated_offsets(n, object);
    auto prev = evaluated_offsets(n - 1, object);
    Entries col;
    for (std::size_t s = 0; s < cells_[n].size(); ++s) {
        const auto& homs = cat_->hom(object, cells_[n][s]);
        for (const auto& f : homs) {
            col.clear();
            for (const auto& r : boundary_[n][s]) {
                const auto& comp = cat_->compose(cat_->morphism(r.morphism), f);
                col.emplace_back(prev[r.target] + comp.position, r.coeff);
            }
            merge_entries(col);
            fn(off[s] + f.position, col);
        }
    }
}

SparseMatrix FreeOrbitComplex::evaluate(std::size_t n, std::size_t object) const
{
    auto off = evaluated_offsets(n, object);
    auto prev = evaluated_offsets(n - 1, object);
    SparseMatrix d(prev.back(), off.back());
    for_each_evaluated_column(n, object, [&](std::size_t c, const Entries& e) {
        SparseMatrix::Column col;
        for (const auto& [r, v] : e)
            col.push_back({r, Integer(v)});
        d.set_column(c, std::move(col));
    });
    return d;
}

ChainComplexZ FreeOrbitComplex::evaluate_augmented(std::size_t object) const
{
    std::vector<std::size_t> ranks{1};
    for (std::size_t n = 0; n <= top(); ++n)
        ranks.push_back(evaluated_offsets(n, object).back());
    ChainComplexZ c(ranks);
    SparseMatrix eps(1, ranks[1]);
    for (std::size_t j = 0; j < ranks[1]; ++j)
        eps.set_column(j, {{0, Integer(1)}});
    c.set_boundary(1, std::move(eps));
    for (std::size_t n = 1; n <= top(); ++n)
        c.set_boundary(n + 1, evaluate(n, object));
    return c;
}

BredonMorphism FreeOrbitComplex::differential(std::size_t n, const BredonModule& source,
                                              const BredonModule& target) const
{
    BredonMorphism phi;
    phi.source = &source;
    phi.target = &target;
    for (std::size_t o = 0; o < cat_->object_count(); ++o) {
        IntMatrix m(target.rank(o), source.rank(o));
        for_each_evaluated_column(n, o, [&](std::size_t c, const Entries& e) {
            for (const auto& [r, v] : e)
                m(r, c) = v;
        });
        phi.components.push_back(std::move(m));
    }
    return phi;
}

ChainComplexZ FreeOrbitComplex::tensor_with(const BredonModule& left) const
{
    if (left.variance() != Variance::Left)
        throw Error(ErrorKind::VarianceMismatch, "homology coefficients must be a left module");
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= top(); ++n) {
        std::vector<std::size_t> off{0};
        for (auto o : cells_[n])
            off.push_back(off.back() + left.rank(o));
        ranks.push_back(off.back());
        offsets.push_back(std::move(off));
    }
    ChainComplexZ c(ranks);
    for (std::size_t n = 1; n <= top(); ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        for (std::size_t s = 0; s < cells_[n].size(); ++s) {
            std::vector<SparseMatrix::Column> cols(left.rank(cells_[n][s]));
            for (const auto& r : boundary_[n][s]) {
                const IntMatrix& a = left.act(r.morphism); // s_tau x s_sigma
                for (std::size_t b = 0; b < a.cols(); ++b)
                    for (std::size_t i = 0; i < a.rows(); ++i)
                        if (a(i, b) != 0)
                            cols[b].push_back({offsets[n - 1][r.target] + i, a(i, b) * r.coeff});
            }
            for (std::size_t b = 0; b < cols.size(); ++b)
                d.set_column(offsets[n][s] + b, std::move(cols[b]));
        }
        c.set_boundary(n, std::move(d));
    }
    return c;
}

CochainComplexZ FreeOrbitComplex::hom_into(const BredonModule& right) const
{
    if (right.variance() != Variance::Right)
        throw Error(ErrorKind::VarianceMismatch, "cohomology coefficients must be a right module");
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= top(); ++n) {
        std::vector<std::size_t> off{0};
        for (auto o : cells_[n])
            off.push_back(off.back() + right.rank(o));
        ranks.push_back(off.back());
        offsets.push_back(std::move(off));
    }
    CochainComplexZ c(ranks);
    for (std::size_t n = 1; n <= top(); ++n) {
        std::vector<SparseMatrix::Column> cols(ranks[n - 1]);
        for (std::size_t s = 0; s < cells_[n].size(); ++s)
            for (const auto& r : boundary_[n][s]) {
                const IntMatrix& a = right.act(r.morphism); // r_sigma x r_tau
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j)
                        if (a(i, j) != 0)
                            cols[offsets[n - 1][r.target] + j].push_back({offsets[n][s] + i, a(i, j) * r.coeff});
            }
        SparseMatrix d(ranks[n], ranks[n - 1]);
        for (std::size_t j = 0; j < cols.size(); ++j)
            d.set_column(j, std::move(cols[j]));
        c.set_coboundary(n, std::move(d));
    }
    return c;
}

bool ObjectExactness::exact() const
{
    if (!squares_to_zero || !homotopy_identity || !matches_orbit_data)
        return false;
    for (const auto& h : homology)
        if (!h.is_zero())
            return false;
    return true;
}

std::vector<std::size_t> resolution_base_objects(const OrbitCategory& cat, ResolutionBase base)
{
    std::vector<std::size_t> out;
    if (base == ResolutionBase::AllMembers) {
        for (std::size_t o = 0; o < cat.object_count(); ++o)
            out.push_back(o);
        return out;
    }
    for (auto o : cat.family().class_representatives()) {
        if (base == ResolutionBase::MaximalClasses) {
            const Subgroup& k = cat.subgroup(o);
            bool maximal = true;
            for (std::size_t l = 0; l < cat.object_count() && maximal; ++l)
                if (cat.subgroup(l).order() > k.order() && k.is_subgroup_of(cat.subgroup(l)))
                    maximal = false;
            if (!maximal)
                continue;
        }
        out.push_back(o);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer estimate_standard_orbits(const OrbitCategory& cat, std::size_t n, ResolutionBase base)
{
    const FiniteGroup& G = *cat.group();
    const auto objects = resolution_base_objects(cat, base);
    Integer total = 0;
    for (int g = 0; g < G.order(); ++g) {
        Integer fixed = 0;
        for (auto o : objects)
            for (std::size_t c = 0; c < cat.coset_count(o); ++c)
                if (cat.left_translate(o, g, c) == c)
                    ++fixed;
        Integer p = 1;
        for (std::size_t i = 0; i <= n; ++i)
            p *= fixed;
        total += p;
    }
    return total / G.order();
}

ResolutionSizeEstimate estimate_standard_resolution(const OrbitCategory& cat, std::size_t length, ResolutionBase base)
{
    ResolutionSizeEstimate e;
    Integer size = 0;
    for (auto o : resolution_base_objects(cat, base))
        size += cat.coset_count(o);
    Integer p = size;
    for (std::size_t n = 0; n <= length; ++n) {
        e.orbits.push_back(estimate_standard_orbits(cat, n, base));
        e.points.push_back(p);
        p *= size;
    }
    return e;
}

std::size_t StandardResolution::act_on_point(int g, std::size_t p) const
{
    std::size_t b = point_block_[p];
    return block_offset_[b] + category().left_translate(base_objects_[b], g, point_coset_[p]);
}

std::vector<std::size_t> StandardResolution::base_fixed_points(std::size_t object) const
{
    std::vector<std::size_t> out;
    const Subgroup& h = category().subgroup(object);
    auto gens = h.generators();
    for (std::size_t p = 0; p < base_size(); ++p) {
        bool fixed = true;
        for (int x : gens)
            if (act_on_point(x, p) != p) {
                fixed = false;
                break;
            }
        if (fixed)
            out.push_back(p);
    }
    return out;
}

std::vector<std::size_t> StandardResolution::orbit_tuple(std::size_t n, std::size_t orbit) const
{
    const auto& r = reps_.at(n);
    std::vector<std::size_t> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        t[i] = r[orbit * (n + 1) + i];
    return t;
}

std::pair<std::size_t, int> StandardResolution::locate(const std::vector<std::size_t>& tuple) const
{
    const FiniteGroup& G = *category().group();
    const std::size_t base = base_size();
    std::size_t orbit = point_block_[tuple[0]];
    int g = category().coset_rep(base_objects_[orbit], point_coset_[tuple[0]]);
    for (std::size_t j = 1; j < tuple.size(); ++j) {
        std::size_t y = act_on_point(G.inv(g), tuple[j]);
        std::size_t slot = orbit * base + y;
        orbit = locate_child_[j - 1][slot];
        g = G.mul(g, locate_elem_[j - 1][slot]);
    }
    return {orbit, g};
}

StandardResolution StandardResolution::build(CategoryPtr cat, std::size_t length, const ResolutionOptions& opts)
{
    const Family& fam = cat->family();
    if (!fam.semi_full())
        throw Error(ErrorKind::FamilyNotSemiFull,
                    "the standard resolution is free only for families closed under intersection");
    const FiniteGroup& G = *cat->group();
    const std::size_t objects = cat->object_count();

    for (std::size_t n = 0; n <= length; ++n) {
        Integer est = estimate_standard_orbits(*cat, n, opts.base);
        if (est > opts.max_orbits_per_degree)
            throw Error(ErrorKind::BudgetExceeded, "degree " + std::to_string(n) + " of the standard resolution has " +
                                                       est.str() + " orbits; budget is " +
                                                       std::to_string(opts.max_orbits_per_degree));
    }

    StandardResolution r;
    r.complex_ = FreeOrbitComplex(cat);
    r.base_objects_ = resolution_base_objects(*cat, opts.base);
    for (std::size_t b = 0; b < r.base_objects_.size(); ++b) {
        r.block_offset_.push_back(r.point_block_.size());
        for (std::size_t c = 0; c < cat->coset_count(r.base_objects_[b]); ++c) {
            r.point_block_.push_back(b);
            r.point_coset_.push_back(c);
        }
    }
    const std::size_t base = r.base_size();
    if (base >= kUnset)
        throw Error(ErrorKind::BudgetExceeded, "base G-set too large");

    // stabilizer of xK is xKx^{-1} = K^{x^{-1}}
    std::vector<std::size_t> point_stab(base);
    for (std::size_t p = 0; p < base; ++p) {
        std::size_t o = r.point_object(p);
        int x = cat->coset_rep(o, r.point_coset_[p]);
        point_stab[p] = cat->object_of(conjugate(cat->subgroup(o), G.inv(x)));
    }
    std::vector<std::size_t> meet(objects * objects);
    for (std::size_t a = 0; a < objects; ++a)
        for (std::size_t b = 0; b < objects; ++b)
            meet[a * objects + b] = cat->object_of(intersect(cat->subgroup(a), cat->subgroup(b)));

    // degree 0: one orbit per block, represented by its trivial coset
    std::vector<std::size_t> cells0 = r.base_objects_;
    r.reps_.emplace_back();
    for (auto off : r.block_offset_)
        r.reps_[0].push_back(static_cast<std::uint32_t>(off));
    r.complex_.add_degree(cells0, {});

    for (std::size_t n = 0; n < length; ++n) {
        const auto& cur_cells = r.complex_.cells(n);
        const std::size_t count = cur_cells.size();
        std::vector<std::uint32_t> child(count * base, kUnset);
        std::vector<int> elem(count * base, 0);
        std::vector<std::size_t> next_cells;
        std::vector<std::uint32_t> next_reps;
        for (std::size_t t = 0; t < count; ++t) {
            const Subgroup& s = cat->subgroup(cur_cells[t]);
            for (std::size_t p = 0; p < base; ++p) {
                if (child[t * base + p] != kUnset)
                    continue;
                auto c = static_cast<std::uint32_t>(next_cells.size());
                next_cells.push_back(meet[cur_cells[t] * objects + point_stab[p]]);
                for (std::size_t i = 0; i <= n; ++i)
                    next_reps.push_back(r.reps_[n][t * (n + 1) + i]);
                next_reps.push_back(static_cast<std::uint32_t>(p));
                for (int x : s.members()) {
                    std::size_t q = r.act_on_point(x, p);
                    if (child[t * base + q] == kUnset) {
                        child[t * base + q] = c;
                        elem[t * base + q] = x;
                    }
                }
            }
        }
        r.locate_child_.push_back(std::move(child));
        r.locate_elem_.push_back(std::move(elem));
        r.reps_.push_back(std::move(next_reps));

        // faces of the new orbit representatives
        const std::size_t m = n + 1;
        std::vector<std::vector<FreeRecord>> bnd(next_cells.size());
        std::vector<std::size_t> tuple(m + 1), face(m);
        for (std::size_t s = 0; s < next_cells.size(); ++s) {
            for (std::size_t i = 0; i <= m; ++i)
                tuple[i] = r.reps_[m][s * (m + 1) + i];
            for (std::size_t i = 0; i <= m; ++i) {
                std::size_t k = 0;
                for (std::size_t j = 0; j <= m; ++j)
                    if (j != i)
                        face[k++] = tuple[j];
                auto [tau, g] = r.locate(face);
                const auto& f = cat->make(next_cells[s], r.complex_.cells(n)[tau], g);
                bnd[s].push_back({i % 2 == 0 ? 1 : -1, tau, f.id});
            }
        }
        r.complex_.add_degree(std::move(next_cells), std::move(bnd));
    }
    return r;
}

namespace {

/// Lexicographic index of tuples over an alphabet of size m (digits are positions in the fixed-point list).
struct TupleCodec {
    std::size_t m = 0;
    std::size_t index(const std::vector<std::size_t>& digits) const
    {
        std::size_t x = 0;
        for (auto d : digits)
            x = x * m + d;
        return x;
    }
    void decode(std::size_t x, std::size_t len, std::vector<std::size_t>& digits) const
    {
        digits.resize(len);
        for (std::size_t i = len; i-- > 0;) {
            digits[i] = x % m;
            x /= m;
        }
    }
    static std::vector<std::size_t> drop(const std::vector<std::size_t>& t, std::size_t i)
    {
        std::vector<std::size_t> out;
        out.reserve(t.size() - 1);
        for (std::size_t j = 0; j < t.size(); ++j)
            if (j != i)
                out.push_back(t[j]);
        return out;
    }
};

std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<std::size_t>::max() / b)
            throw Error(ErrorKind::BudgetExceeded, "evaluated resolution too large");
        r *= b;
    }
    return r;
}

} // namespace

ObjectExactness StandardResolution::certify(std::size_t object, std::size_t snf_budget) const
{
    ObjectExactness rep;
    rep.object = object;
    const std::size_t top = length();
    const auto fixed = base_fixed_points(object);
    TupleCodec codec{fixed.size()};
    std::vector<std::size_t> pos(base_size(), kUnset);
    for (std::size_t i = 0; i < fixed.size(); ++i)
        pos[fixed[i]] = i;
    if (fixed.empty())
        throw Error(ErrorKind::InvalidArgument, "Delta_0 has no fixed points for this object");
    const std::size_t b0 = 0; // contraction towards the first fixed point
    rep.basis_size_top = ipow(codec.m, top + 1);

    auto boundary_of = [&](const std::vector<std::size_t>& t, Entries& out, long long scale) {
        for (std::size_t i = 0; i < t.size(); ++i)
            out.emplace_back(codec.index(TupleCodec::drop(t, i)), (i % 2 == 0 ? 1 : -1) * scale);
    };

    std::vector<std::size_t> t;
    // d d = 0 on tuples
    for (std::size_t n = 2; n <= top && rep.squares_to_zero; ++n) {
        const std::size_t count = ipow(codec.m, n + 1);
        Entries acc, first;
        for (std::size_t x = 0; x < count; ++x) {
            codec.decode(x, n + 1, t);
            acc.clear();
            for (std::size_t i = 0; i <= n; ++i) {
                auto f = TupleCodec::drop(t, i);
                for (std::size_t j = 0; j < n; ++j)
                    acc.emplace_back(codec.index(TupleCodec::drop(f, j)), ((i + j) % 2 == 0) ? 1 : -1);
            }
            merge_entries(acc);
            if (!acc.empty()) {
                rep.squares_to_zero = false;
                break;
            }
        }
    }

    // contracting homotopy h(t) = (b, t), h(1) = (b) for an H-fixed point b: check d h + h d = id on C_{-1}..C_{top-1}
    for (std::size_t n = 0; n < top && rep.homotopy_identity; ++n) {
        const std::size_t count = ipow(codec.m, n + 1);
        Entries acc;
        for (std::size_t x = 0; x < count; ++x) {
            codec.decode(x, n + 1, t);
            acc.clear();
            std::vector<std::size_t> ht{b0};
            ht.insert(ht.end(), t.begin(), t.end());
            boundary_of(ht, acc, 1); // d h t
            if (n == 0) {
                acc.emplace_back(b0, 1); // h eps t
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    std::vector<std::size_t> hf{b0};
                    auto f = TupleCodec::drop(t, i);
                    hf.insert(hf.end(), f.begin(), f.end());
                    acc.emplace_back(codec.index(hf), i % 2 == 0 ? 1 : -1);
                }
            }
            acc.emplace_back(x, -1);
            merge_entries(acc);
            if (!acc.empty()) {
                rep.homotopy_identity = false;
                break;
            }
        }
    }

    // orbit-wise evaluation vs tuples: basis (sigma, f_x) |-> x * rep_sigma
    const OrbitCategory& cat = category();
    std::vector<std::uint32_t> prev_map;
    for (std::size_t n = 0; n <= top && rep.matches_orbit_data; ++n) {
        const std::size_t count = ipow(codec.m, n + 1);
        auto off = complex_.evaluated_offsets(n, object);
        if (off.back() != count) {
            rep.matches_orbit_data = false;
            break;
        }
        std::vector<std::uint32_t> map(count, kUnset);
        std::vector<char> hit(count, 0);
        std::vector<std::size_t> digits(n + 1);
        for (std::size_t s = 0; s < complex_.cell_count(n) && rep.matches_orbit_data; ++s) {
            for (const auto& f : cat.hom(object, complex_.cells(n)[s])) {
                bool ok = true;
                for (std::size_t i = 0; i <= n; ++i) {
                    std::size_t p = act_on_point(f.rep, reps_[n][s * (n + 1) + i]);
                    if (pos[p] == kUnset) {
                        ok = false;
                        break;
                    }
                    digits[i] = pos[p];
                }
                std::size_t idx = ok ? codec.index(digits) : 0;
                if (!ok || hit[idx]) {
                    rep.matches_orbit_data = false;
                    break;
                }
                hit[idx] = 1;
                map[off[s] + f.position] = static_cast<std::uint32_t>(idx);
            }
        }
        if (rep.matches_orbit_data && n >= 1) {
            Entries expect, got;
            complex_.for_each_evaluated_column(n, object, [&](std::size_t c, const Entries& e) {
                if (!rep.matches_orbit_data)
                    return;
                got.clear();
                for (const auto& [row, v] : e)
                    got.emplace_back(prev_map[row], v);
                merge_entries(got);
                codec.decode(map[c], n + 1, t);
                expect.clear();
                boundary_of(t, expect, 1);
                merge_entries(expect);
                if (got != expect)
                    rep.matches_orbit_data = false;
            });
        }
        prev_map = std::move(map);
    }

    if (rep.basis_size_top <= snf_budget) {
        ChainComplexZ aug = complex_.evaluate_augmented(object);
        for (std::size_t k = 0; k < top + 1; ++k)
            rep.homology.push_back(aug.homology(k));
    }
    return rep;
}

bool StandardResolution::verify_stabilizers(std::size_t n) const
{
    const OrbitCategory& cat = category();
    const FiniteGroup& G = *cat.group();
    const auto order = static_cast<std::size_t>(G.order());
    const std::size_t words = (order + 63) / 64;
    const std::size_t base = base_size();
    using Mask = std::vector<std::uint64_t>;
    auto mask_of = [&](const Subgroup& h) {
        Mask m(words, 0);
        for (int x : h.members())
            m[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64);
        return m;
    };
    std::vector<Mask> point_mask(base);
    for (std::size_t p = 0; p < base; ++p) {
        std::size_t o = point_object(p);
        int x = cat.coset_rep(o, point_coset_[p]);
        Mask m(words, 0);
        for (int k : cat.subgroup(o).members()) {
            int c = G.mul(G.mul(x, k), G.inv(x)); // x K x^{-1}
            m[static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
        }
        point_mask[p] = std::move(m);
    }
    std::vector<Mask> family_masks;
    for (const auto& h : cat.family().members())
        family_masks.push_back(mask_of(h));
    std::sort(family_masks.begin(), family_masks.end());
    std::vector<std::size_t> act(base * order);
    for (std::size_t p = 0; p < base; ++p)
        for (std::size_t g = 0; g < order; ++g)
            act[p * order + g] = act_on_point(static_cast<int>(g), p);

    const std::size_t count = ipow(base, n + 1);
    TupleCodec codec{base};
    std::vector<std::size_t> t;
    Mask formula(words), brute(words);
    for (std::size_t x = 0; x < count; ++x) {
        codec.decode(x, n + 1, t);
        std::fill(formula.begin(), formula.end(), ~std::uint64_t{0});
        for (auto p : t)
            for (std::size_t w = 0; w < words; ++w)
                formula[w] &= point_mask[p][w];
        std::fill(brute.begin(), brute.end(), 0);
        for (std::size_t g = 0; g < order; ++g) {
            bool fixes = true;
            for (auto p : t)
                if (act[p * order + g] != p) {
                    fixes = false;
                    break;
                }
            if (fixes)
                brute[g / 64] |= std::uint64_t{1} << (g % 64);
        }
        if (order % 64 != 0)
            formula[words - 1] &= (std::uint64_t{1} << (order % 64)) - 1;
        if (formula != brute || !std::binary_search(family_masks.begin(), family_masks.end(), brute))
            return false;
    }
    // orbit representatives carry the right stabilizer object
    for (std::size_t s = 0; s < complex_.cell_count(n); ++s) {
        Mask m(words, ~std::uint64_t{0});
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t w = 0; w < words; ++w)
                m[w] &= point_mask[reps_[n][s * (n + 1) + i]][w];
        if (order % 64 != 0)
            m[words - 1] &= (std::uint64_t{1} << (order % 64)) - 1;
        if (m != mask_of(cat.subgroup(complex_.cells(n)[s])))
            return false;
    }
    return true;
}

KernelReport kernel_at(const FreeOrbitComplex& c, std::size_t n)
{
    if (n < 1 || n > c.top())
        throw Error(ErrorKind::InvalidArgument, "kernel degree out of range");
    const OrbitCategory& cat = c.category();
    KernelReport rep;
    BredonModule cn = c.module(n);
    BredonModule cm = c.module(n - 1);
    BredonMorphism d = c.differential(n, cn, cm);
    for (std::size_t o = 0; o < cat.object_count(); ++o) {
        rep.bases.push_back(kernel_basis(d.components[o]));
        rep.ranks.push_back(rep.bases.back().cols());
    }
    for (const auto& f : cat.morphisms()) {
        // C_n(f) : C_n(G/K) -> C_n(G/H) must send ker d_n(G/K) into ker d_n(G/H)
        IntMatrix image = d.components[f.source] * (cn.act(f) * rep.bases[f.target]);
        if (!image.is_zero())
            rep.action_preserves_kernels = false;
    }
    return rep;
}

} // namespace bredon
