#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "bredon/family.hpp"

namespace bredon {

/// f_{x,H,K} : G/H -> G/K, gH |-> gxK. Stored by the least element of the coset xK.
struct OrbitMorphism {
    std::size_t source = 0; // object index (member of the family)
    std::size_t target = 0;
    std::size_t coset = 0; // index of xK in the coset list of the target
    int rep = 0;           // least element of xK
    std::size_t id = 0;    // global index in the category
    std::size_t position = 0; // index inside hom(source, target)

    friend bool operator==(const OrbitMorphism& a, const OrbitMorphism& b)
    {
        return a.source == b.source && a.target == b.target && a.coset == b.coset;
    }
};

class OrbitCategory;
using CategoryPtr = std::shared_ptr<const OrbitCategory>;

/// O_F G with one object per member of F (not per conjugacy class).
class OrbitCategory {
public:
    static constexpr std::size_t kMaxObjects = 64;

    static CategoryPtr build(Family family);

    const Family& family() const { return family_; }
    const GroupPtr& group() const { return family_.group(); }
    std::size_t object_count() const { return family_.size(); }
    const Subgroup& subgroup(std::size_t object) const { return family_.member(object); }
    std::size_t object_of(const Subgroup& h) const;

    /// Cosets of G/H, ordered by least element.
    std::size_t coset_count(std::size_t object) const { return coset_reps_[object].size(); }
    int coset_rep(std::size_t object, std::size_t coset) const { return coset_reps_[object][coset]; }
    std::size_t coset_of(std::size_t object, int g) const { return coset_index_[object][static_cast<std::size_t>(g)]; }
    /// g * (xH)
    std::size_t left_translate(std::size_t object, int g, std::size_t coset) const;

    /// (G/K)^H in coset order; empty unless H is subconjugate to K.
    const std::vector<OrbitMorphism>& hom(std::size_t source, std::size_t target) const
    {
        return hom_[source * object_count() + target];
    }
    std::size_t morphism_count() const { return morphisms_.size(); }
    const OrbitMorphism& morphism(std::size_t id) const { return morphisms_[id]; }
    const std::vector<OrbitMorphism>& morphisms() const { return morphisms_; }

    /// f_{x,H,K}; x need not be canonical. Throws InvalidArgument unless H^x <= K.
    const OrbitMorphism& make(std::size_t source, std::size_t target, int x) const;
    std::optional<std::size_t> find(std::size_t source, std::size_t target, int x) const;
    const OrbitMorphism& identity(std::size_t object) const;
    /// g o f; throws CompositionMismatch unless f.target == g.source.
    const OrbitMorphism& compose(const OrbitMorphism& g, const OrbitMorphism& f) const;
    bool is_isomorphism(const OrbitMorphism& f) const;

private:
    explicit OrbitCategory(Family family);
    Family family_;
    std::vector<std::vector<int>> coset_reps_;
    std::vector<std::vector<std::size_t>> coset_index_;
    std::vector<std::vector<OrbitMorphism>> hom_;
    // per (source, target) pair: coset index -> position in hom list, or npos
    std::vector<std::vector<std::size_t>> hom_position_;
    std::vector<OrbitMorphism> morphisms_;
};

} // namespace bredon
