#include "bredon/gset.hpp"

#include <limits>

#include "bredon/error.hpp"

namespace bredon {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

GSet::GSet(GroupPtr g, std::size_t size, const std::function<std::size_t(int, std::size_t)>& action)
    : group_(std::move(g)), size_(size), order_(static_cast<std::size_t>(group_->order()))
{
    table_.resize(size_ * order_);
    for (std::size_t p = 0; p < size_; ++p)
        for (std::size_t x = 0; x < order_; ++x) {
            std::size_t q = action(static_cast<int>(x), p);
            if (q >= size_)
                throw Error(ErrorKind::InvalidArgument, "G-set action leaves the point range");
            table_[p * order_ + x] = q;
        }
    const FiniteGroup& G = *group_;
    for (std::size_t p = 0; p < size_; ++p) {
        if (act(0, p) != p)
            throw Error(ErrorKind::InvalidArgument, "identity does not act trivially");
        for (int a : G.generator_indices())
            for (std::size_t x = 0; x < order_; ++x)
                if (act(G.mul(static_cast<int>(x), a), p) != act(static_cast<int>(x), act(a, p)))
                    throw Error(ErrorKind::InvalidArgument, "table is not a left action");
    }

    orbit_of_.assign(size_, npos);
    transporter_.assign(size_, 0);
    for (std::size_t p = 0; p < size_; ++p) {
        if (orbit_of_[p] != npos)
            continue;
        std::size_t o = reps_.size();
        reps_.push_back(p);
        std::vector<int> stab;
        for (std::size_t x = 0; x < order_; ++x) {
            std::size_t q = act(static_cast<int>(x), p);
            if (q == p)
                stab.push_back(static_cast<int>(x));
            if (orbit_of_[q] == npos) {
                orbit_of_[q] = o;
                transporter_[q] = static_cast<int>(x);
            }
        }
        stabilizers_.emplace_back(group_, std::move(stab));
    }
}

GSet GSet::coset_union(GroupPtr g, const std::vector<Subgroup>& stabilizers)
{
    const FiniteGroup& G = *g;
    // cosets of each K_j, ordered by least element
    std::vector<std::vector<int>> reps(stabilizers.size());
    std::vector<std::vector<std::size_t>> index(stabilizers.size());
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t j = 0; j < stabilizers.size(); ++j) {
        index[j].assign(static_cast<std::size_t>(G.order()), npos);
        for (int x = 0; x < G.order(); ++x) {
            if (index[j][static_cast<std::size_t>(x)] != npos)
                continue;
            std::size_t c = reps[j].size();
            reps[j].push_back(x);
            for (int k : stabilizers[j].members())
                index[j][static_cast<std::size_t>(G.mul(x, k))] = c;
        }
        offset.push_back(total);
        total += reps[j].size();
    }
    std::vector<std::size_t> block(total);
    for (std::size_t j = 0; j < stabilizers.size(); ++j)
        for (std::size_t c = 0; c < reps[j].size(); ++c)
            block[offset[j] + c] = j;
    return GSet(g, total, [&](int x, std::size_t p) {
        std::size_t j = block[p];
        int r = reps[j][p - offset[j]];
        return offset[j] + index[j][static_cast<std::size_t>(G.mul(x, r))];
    });
}

GSet GSet::empty(GroupPtr g)
{
    return GSet(std::move(g), 0, [](int, std::size_t p) { return p; });
}

Subgroup GSet::stabilizer(std::size_t p) const
{
    std::vector<int> m;
    for (std::size_t x = 0; x < order_; ++x)
        if (act(static_cast<int>(x), p) == p)
            m.push_back(static_cast<int>(x));
    return Subgroup(group_, std::move(m));
}

std::vector<std::size_t> GSet::fixed_points(const Subgroup& h) const
{
    auto gens = h.generators();
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < size_; ++p) {
        bool fixed = true;
        for (int x : gens)
            if (act(x, p) != p) {
                fixed = false;
                break;
            }
        if (fixed)
            out.push_back(p);
    }
    return out;
}

GSet disjoint_union(const GSet& a, const GSet& b)
{
    const std::size_t na = a.size();
    return GSet(a.group(), na + b.size(), [&](int x, std::size_t p) {
        return p < na ? a.act(x, p) : na + b.act(x, p - na);
    });
}

GSet product(const GSet& a, const GSet& b)
{
    const std::size_t nb = b.size();
    return GSet(a.group(), a.size() * nb, [&](int x, std::size_t p) {
        return a.act(x, p / nb) * nb + b.act(x, p % nb);
    });
}

} // namespace bredon
