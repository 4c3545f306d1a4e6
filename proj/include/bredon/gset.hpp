#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "bredon/group.hpp"

namespace bredon {

/// Finite left G-set with an explicit action table.
/// Orbits are numbered by first appearance; each orbit's representative is its least point.
class GSet {
public:
    /// action(g, p) must define a left action of the parent group on {0, ..., size-1}.
    GSet(GroupPtr g, std::size_t size, const std::function<std::size_t(int, std::size_t)>& action);

    /// G/K_1 + ... + G/K_m, orbit j = G/K_j with representative eK_j; cosets ordered by least element.
    static GSet coset_union(GroupPtr g, const std::vector<Subgroup>& stabilizers);
    static GSet empty(GroupPtr g);
    static GSet point(GroupPtr g) { return coset_union(g, {Subgroup::whole(g)}); }

    const GroupPtr& group() const { return group_; }
    std::size_t size() const { return size_; }
    std::size_t act(int g, std::size_t p) const { return table_[p * order_ + static_cast<std::size_t>(g)]; }

    std::size_t orbit_count() const { return reps_.size(); }
    std::size_t orbit_rep(std::size_t orbit) const { return reps_[orbit]; }
    const Subgroup& orbit_stabilizer(std::size_t orbit) const { return stabilizers_[orbit]; }
    std::size_t orbit_of(std::size_t p) const { return orbit_of_[p]; }
    /// Some g with p = g * orbit_rep(orbit_of(p)).
    int transporter(std::size_t p) const { return transporter_[p]; }
    Subgroup stabilizer(std::size_t p) const;

    /// X^H, ascending.
    std::vector<std::size_t> fixed_points(const Subgroup& h) const;

    /// X + Y with Y's points shifted by |X|.
    friend GSet disjoint_union(const GSet& a, const GSet& b);
    /// X x Y with diagonal action, point (x, y) at x * |Y| + y.
    friend GSet product(const GSet& a, const GSet& b);

private:
    GroupPtr group_;
    std::size_t size_ = 0;
    std::size_t order_ = 0;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> reps_;
    std::vector<Subgroup> stabilizers_;
    std::vector<std::size_t> orbit_of_;
    std::vector<int> transporter_;
};

GSet disjoint_union(const GSet& a, const GSet& b);
GSet product(const GSet& a, const GSet& b);

} // namespace bredon
