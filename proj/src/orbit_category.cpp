#include "bredon/orbit_category.hpp"

#include <limits>

#include "bredon/error.hpp"

namespace bredon {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

CategoryPtr OrbitCategory::build(Family family)
{
    if (family.size() > kMaxObjects)
        throw Error(ErrorKind::BudgetExceeded, "family has " + std::to_string(family.size()) +
                                                   " members; orbit category limit is " +
                                                   std::to_string(kMaxObjects));
    return CategoryPtr(new OrbitCategory(std::move(family)));
}

OrbitCategory::OrbitCategory(Family family) : family_(std::move(family))
{
    const FiniteGroup& G = *group();
    const std::size_t n = object_count();
    const auto order = static_cast<std::size_t>(G.order());
    coset_reps_.resize(n);
    coset_index_.assign(n, std::vector<std::size_t>(order, npos));
    for (std::size_t o = 0; o < n; ++o) {
        const Subgroup& h = subgroup(o);
        for (int g = 0; g < G.order(); ++g) {
            if (coset_index_[o][static_cast<std::size_t>(g)] != npos)
                continue;
            // g is the least element of gH since elements are scanned in order
            std::size_t c = coset_reps_[o].size();
            coset_reps_[o].push_back(g);
            for (int x : h.members())
                coset_index_[o][static_cast<std::size_t>(G.mul(g, x))] = c;
        }
    }

    hom_.resize(n * n);
    hom_position_.resize(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        const Subgroup& h = subgroup(s);
        for (std::size_t t = 0; t < n; ++t) {
            const Subgroup& k = subgroup(t);
            auto& list = hom_[s * n + t];
            auto& pos = hom_position_[s * n + t];
            pos.assign(coset_count(t), npos);
            if (k.order() % h.order() != 0)
                continue;
            for (std::size_t c = 0; c < coset_count(t); ++c) {
                int x = coset_reps_[t][c];
                bool fixed = true;
                for (int y : h.members())
                    if (!k.contains(G.conj(y, x))) {
                        fixed = false;
                        break;
                    }
                if (!fixed)
                    continue;
                pos[c] = list.size();
                list.push_back(OrbitMorphism{s, t, c, x, 0, list.size()});
            }
        }
    }
    for (auto& list : hom_)
        for (auto& f : list) {
            f.id = morphisms_.size();
            morphisms_.push_back(f);
        }
}

std::size_t OrbitCategory::object_of(const Subgroup& h) const
{
    auto idx = family_.index_of(h);
    if (!idx)
        throw Error(ErrorKind::StabilizerOutsideFamily, "subgroup " + h.describe() + " is not in the family");
    return *idx;
}

std::size_t OrbitCategory::left_translate(std::size_t object, int g, std::size_t coset) const
{
    return coset_of(object, group()->mul(g, coset_reps_[object][coset]));
}

std::optional<std::size_t> OrbitCategory::find(std::size_t source, std::size_t target, int x) const
{
    std::size_t c = coset_of(target, x);
    std::size_t p = hom_position_[source * object_count() + target][c];
    if (p == npos)
        return std::nullopt;
    return hom_[source * object_count() + target][p].id;
}

const OrbitMorphism& OrbitCategory::make(std::size_t source, std::size_t target, int x) const
{
    auto id = find(source, target, x);
    if (!id)
        throw Error(ErrorKind::InvalidArgument, "H^x is not contained in K for the requested orbit morphism");
    return morphisms_[*id];
}

const OrbitMorphism& OrbitCategory::identity(std::size_t object) const
{
    return make(object, object, 0);
}

const OrbitMorphism& OrbitCategory::compose(const OrbitMorphism& g, const OrbitMorphism& f) const
{
    if (f.target != g.source)
        throw Error(ErrorKind::CompositionMismatch, "target of f differs from source of g");
    // f_{y,K,L} o f_{x,H,K} = f_{xy,H,L}
    return make(f.source, g.target, group()->mul(f.rep, g.rep));
}

bool OrbitCategory::is_isomorphism(const OrbitMorphism& f) const
{
    const Subgroup& h = subgroup(f.source);
    const Subgroup& k = subgroup(f.target);
    return h.order() == k.order(); // H^x <= K with equal orders forces H^x = K
}

} // namespace bredon
