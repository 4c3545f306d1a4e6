#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bredon/group.hpp"

namespace bredon {

/// Conjugation-closed, non-empty set of subgroups; members in canonical subgroup order.
class Family {
public:
    /// Conjugation closure of the seeds.
    static Family closure_of(GroupPtr g, const std::vector<Subgroup>& seeds);
    /// Smallest family containing the seeds that is closed under conjugation and intersection.
    static Family semi_full_closure_of(GroupPtr g, const std::vector<Subgroup>& seeds);

    static Family trivial(GroupPtr g);
    static Family all(GroupPtr g);
    static Family cyclic(GroupPtr g);
    static Family p_subgroups(GroupPtr g, int p);

    const GroupPtr& group() const { return group_; }
    const std::vector<Subgroup>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const Subgroup& member(std::size_t i) const { return members_[i]; }
    std::optional<std::size_t> index_of(const Subgroup& h) const;
    bool contains(const Subgroup& h) const { return index_of(h).has_value(); }
    bool contains_whole_group() const;

    bool semi_full() const { return semi_full_; }
    bool full() const { return full_; }

    /// One member per conjugacy class (the first in member order).
    std::vector<std::size_t> class_representatives() const;

private:
    Family(GroupPtr g, std::vector<Subgroup> members);
    GroupPtr group_;
    std::vector<Subgroup> members_;
    bool semi_full_ = false;
    bool full_ = false;
};

/// Parsed form of `trivial | all | cyclic | p:<prime> | custom:<file>`; custom seeds are loaded separately.
struct FamilySpec {
    enum class Kind { Trivial, All, Cyclic, PSubgroups, Custom };
    Kind kind = Kind::Trivial;
    int prime = 0;
    std::string path;

    static FamilySpec parse(const std::string& text);
};

Family build_family(const GroupPtr& g, const FamilySpec& spec, const std::vector<Subgroup>& custom_seeds = {});

/// {H1 x H2 : Hi in Fi} inside the direct product.
Family product_family(const ProductGroup& pg, const Family& f1, const Family& f2);

} // namespace bredon
