#include "bredon/family.hpp"

#include <algorithm>
#include <set>

#include "bredon/error.hpp"

namespace bredon {

namespace {

std::vector<Subgroup> conjugation_orbit_union(const std::vector<Subgroup>& seeds)
{
    std::vector<Subgroup> out;
    for (const auto& s : seeds)
        for (int g = 0; g < s.group().order(); ++g)
            out.push_back(conjugate(s, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

Family::Family(GroupPtr g, std::vector<Subgroup> members) : group_(std::move(g)), members_(std::move(members))
{
    if (members_.empty())
        throw Error(ErrorKind::InvalidArgument, "a family must be non-empty");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

    semi_full_ = true;
    for (std::size_t i = 0; i < members_.size() && semi_full_; ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (!contains(intersect(members_[i], members_[j]))) {
                semi_full_ = false;
                break;
            }
    full_ = true;
    for (const auto& h : members_) {
        for (const auto& k : enumerate_subgroups_of(h))
            if (!contains(k)) {
                full_ = false;
                break;
            }
        if (!full_)
            break;
    }
}

Family Family::closure_of(GroupPtr g, const std::vector<Subgroup>& seeds)
{
    return Family(std::move(g), conjugation_orbit_union(seeds));
}

Family Family::semi_full_closure_of(GroupPtr g, const std::vector<Subgroup>& seeds)
{
    std::vector<Subgroup> cur = conjugation_orbit_union(seeds);
    for (;;) {
        std::vector<Subgroup> next = cur;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                next.push_back(intersect(cur[i], cur[j]));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // intersections of conjugation-closed sets stay conjugation-closed
        if (next.size() == cur.size())
            break;
        cur = std::move(next);
    }
    return Family(std::move(g), std::move(cur));
}

Family Family::trivial(GroupPtr g)
{
    Subgroup t = Subgroup::trivial(g);
    return Family(std::move(g), {t});
}

Family Family::all(GroupPtr g)
{
    auto subs = enumerate_subgroups(g);
    return Family(std::move(g), std::move(subs));
}

Family Family::cyclic(GroupPtr g)
{
    std::vector<Subgroup> subs;
    for (int x = 0; x < g->order(); ++x)
        subs.push_back(Subgroup::generate(g, {x}));
    return Family(std::move(g), std::move(subs));
}

Family Family::p_subgroups(GroupPtr g, int p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::Parse, std::to_string(p) + " is not a prime");
    std::vector<Subgroup> subs;
    for (auto& h : enumerate_subgroups(g)) {
        int n = h.order();
        while (n % p == 0)
            n /= p;
        if (n == 1)
            subs.push_back(std::move(h));
    }
    return Family(std::move(g), std::move(subs));
}

std::optional<std::size_t> Family::index_of(const Subgroup& h) const
{
    auto it = std::lower_bound(members_.begin(), members_.end(), h);
    if (it == members_.end() || !(*it == h))
        return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

bool Family::contains_whole_group() const
{
    return members_.back().order() == group_->order();
}

std::vector<std::size_t> Family::class_representatives() const
{
    std::vector<std::size_t> reps;
    std::vector<char> covered(members_.size(), 0);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (covered[i])
            continue;
        reps.push_back(i);
        for (int g = 0; g < group_->order(); ++g)
            covered[*index_of(conjugate(members_[i], g))] = 1;
    }
    return reps;
}

FamilySpec FamilySpec::parse(const std::string& text)
{
    FamilySpec s;
    if (text == "trivial") {
        s.kind = Kind::Trivial;
    } else if (text == "all") {
        s.kind = Kind::All;
    } else if (text == "cyclic") {
        s.kind = Kind::Cyclic;
    } else if (text.rfind("p:", 0) == 0) {
        s.kind = Kind::PSubgroups;
        try {
            s.prime = std::stoi(text.substr(2));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad prime in family spec '" + text + "'");
        }
    } else if (text.rfind("custom:", 0) == 0) {
        s.kind = Kind::Custom;
        s.path = text.substr(7);
    } else {
        throw Error(ErrorKind::Parse, "unknown family spec '" + text + "'");
    }
    return s;
}

Family build_family(const GroupPtr& g, const FamilySpec& spec, const std::vector<Subgroup>& custom_seeds)
{
    switch (spec.kind) {
    case FamilySpec::Kind::Trivial: return Family::trivial(g);
    case FamilySpec::Kind::All: return Family::all(g);
    case FamilySpec::Kind::Cyclic: return Family::cyclic(g);
    case FamilySpec::Kind::PSubgroups: return Family::p_subgroups(g, spec.prime);
    case FamilySpec::Kind::Custom:
        if (custom_seeds.empty())
            throw Error(ErrorKind::Parse, "custom family has no subgroups");
        return Family::closure_of(g, custom_seeds);
    }
    throw Error(ErrorKind::InvalidArgument, "unhandled family kind");
}

Family product_family(const ProductGroup& pg, const Family& f1, const Family& f2)
{
    std::vector<Subgroup> members;
    for (const auto& a : f1.members())
        for (const auto& b : f2.members())
            members.push_back(pg.product_subgroup(a, b));
    return Family::closure_of(pg.group, members);
}

} // namespace bredon
