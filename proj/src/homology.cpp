#include "bredon/homology.hpp"

#include <numeric>
#include <sstream>

#include "bredon/error.hpp"

namespace bredon {

namespace {

StandardResolution build_resolution(const CategoryPtr& cat, std::size_t length, const HomologyOptions& opts)
{
    ResolutionOptions ro;
    ro.base = opts.base;
    ro.max_orbits_per_degree = opts.max_orbits_per_degree;
    ro.threads = opts.threads;
    return StandardResolution::build(cat, length, ro);
}

void fill_provenance(HomologyReport& rep, const StandardResolution& res)
{
    rep.truncation = res.length();
    for (std::size_t n = 0; n <= res.length(); ++n)
        rep.orbit_counts.push_back(res.orbit_count(n));
}

} // namespace

std::vector<AbGroupInvariants> homology_over(const FreeOrbitComplex& resolution, const BredonModule& left,
                                             std::size_t degree)
{
    if (degree >= resolution.top())
        throw Error(ErrorKind::InvalidArgument, "homology in degree " + std::to_string(degree) +
                                                    " needs a resolution of length " + std::to_string(degree + 1));
    ChainComplexZ c = resolution.tensor_with(left);
    auto all = c.homology_all();
    all.resize(degree + 1);
    return all;
}

std::vector<AbGroupInvariants> cohomology_over(const FreeOrbitComplex& resolution, const BredonModule& right,
                                               std::size_t degree)
{
    if (degree >= resolution.top())
        throw Error(ErrorKind::InvalidArgument, "cohomology in degree " + std::to_string(degree) +
                                                    " needs a resolution of length " + std::to_string(degree + 1));
    CochainComplexZ c = resolution.hom_into(right);
    auto all = c.cohomology_all();
    all.resize(degree + 1);
    return all;
}

HomologyReport bredon_homology(const BredonModule& left, std::size_t degree, const HomologyOptions& opts)
{
    if (left.variance() != Variance::Left)
        throw Error(ErrorKind::VarianceMismatch, "homology coefficients must be a left module");
    auto res = build_resolution(left.category_ptr(), degree + 1, opts);
    HomologyReport rep;
    fill_provenance(rep, res);
    ChainComplexZ c = res.complex().tensor_with(left);
    rep.chain_ranks = c.ranks();
    rep.groups = c.homology_all();
    rep.groups.resize(degree + 1);
    return rep;
}

HomologyReport bredon_cohomology(const BredonModule& right, std::size_t degree, const HomologyOptions& opts)
{
    if (right.variance() != Variance::Right)
        throw Error(ErrorKind::VarianceMismatch, "cohomology coefficients must be a right module");
    auto res = build_resolution(right.category_ptr(), degree + 1, opts);
    HomologyReport rep;
    fill_provenance(rep, res);
    CochainComplexZ c = res.complex().hom_into(right);
    for (std::size_t n = 0; n <= c.top(); ++n)
        rep.chain_ranks.push_back(c.rank(n));
    rep.groups = c.cohomology_all();
    rep.groups.resize(degree + 1);
    return rep;
}

std::string format_homology(const std::vector<AbGroupInvariants>& groups, const std::string& symbol)
{
    std::ostringstream os;
    for (std::size_t n = 0; n < groups.size(); ++n)
        os << symbol << n << " = " << groups[n].to_string() << '\n';
    return os.str();
}

CdZeroReport is_cd_zero(const Family& family)
{
    const std::size_t n = family.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (family.member(a).is_subgroup_of(family.member(b)) || family.member(b).is_subgroup_of(family.member(a)))
                parent[find(a)] = find(b);

    CdZeroReport rep;
    rep.semi_full = family.semi_full();
    rep.contains_whole_group = family.contains_whole_group();
    std::vector<std::size_t> slot(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t r = find(a);
        if (slot[r] == n) {
            slot[r] = rep.components.size();
            rep.components.emplace_back();
        }
        rep.components[slot[r]].members.push_back(a);
    }

    rep.cd_zero = true;
    std::ostringstream why;
    for (auto& comp : rep.components) {
        std::vector<std::size_t> maximal;
        for (auto a : comp.members) {
            bool is_max = true;
            for (auto b : comp.members)
                if (b != a && family.member(a).is_subgroup_of(family.member(b)))
                    is_max = false;
            if (is_max)
                maximal.push_back(a);
        }
        comp.unique_maximal = maximal.size() == 1;
        if (!comp.unique_maximal) {
            rep.cd_zero = false;
            if (why.tellp() == 0)
                why << "a component has " << maximal.size() << " maximal members, e.g. "
                    << family.member(maximal[0]).describe() << " and " << family.member(maximal[1]).describe();
            continue;
        }
        comp.maximal = maximal[0];
        const Subgroup& m = family.member(comp.maximal);
        Subgroup nm = normalizer(m);
        comp.self_normalizing = nm.order() == m.order();
        if (!comp.self_normalizing) {
            rep.cd_zero = false;
            if (why.tellp() == 0)
                why << "maximal member " << m.describe() << " has normaliser of order " << nm.order()
                    << " != " << m.order();
        }
    }
    if (rep.cd_zero)
        why << "every component has a unique self-normalising maximal member";
    if (rep.semi_full) {
        rep.cross_check_agrees = rep.cd_zero == rep.contains_whole_group;
        why << "; semi-full family, G " << (rep.contains_whole_group ? "in" : "not in") << " F"
            << (rep.cross_check_agrees ? " (agrees)" : " (DISAGREES)");
    }
    rep.explanation = why.str();
    return rep;
}

DimensionBounds dimension_bounds(const CategoryPtr& cat, std::size_t degree, const HomologyOptions& opts)
{
    std::vector<BredonModule> battery{BredonModule::trivial(cat, Variance::Right),
                                      BredonModule::trivial(cat, Variance::Left)};
    std::vector<std::string> labels{"trivial", "trivial"};
    for (auto k : cat->family().class_representatives()) {
        std::string h = cat->subgroup(k).describe();
        battery.push_back(BredonModule::free_sum(cat, {k}));
        labels.push_back("Z[?,G/" + h + "]");
        battery.push_back(BredonModule::free_left(cat, k));
        labels.push_back("Z[G/" + h + ",?]");
    }
    return dimension_bounds(cat, degree, battery, labels, opts);
}

DimensionBounds dimension_bounds(const CategoryPtr& cat, std::size_t degree, const std::vector<BredonModule>& battery,
                                 const std::vector<std::string>& labels, const HomologyOptions& opts)
{
    if (labels.size() != battery.size())
        throw Error(ErrorKind::InvalidArgument, "one label per battery module");
    DimensionBounds out;
    out.degree = degree;
    out.cd_zero = is_cd_zero(cat->family()).cd_zero;
    auto res = build_resolution(cat, degree + 1, opts);
    for (std::size_t i = 0; i < battery.size(); ++i) {
        BatteryResult r;
        r.label = labels[i];
        r.variance = battery[i].variance();
        r.groups = r.variance == Variance::Right ? cohomology_over(res.complex(), battery[i], degree)
                                                 : homology_over(res.complex(), battery[i], degree);
        for (std::size_t d = 0; d <= degree; ++d)
            if (!r.groups[d].is_zero()) {
                auto& bound = r.variance == Variance::Right ? out.cd_lower : out.hd_lower;
                bound = std::max(bound, d);
            }
        out.battery.push_back(std::move(r));
    }
    return out;
}

} // namespace bredon
