#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bredon/gset.hpp"
#include "bredon/matrix.hpp"
#include "bredon/orbit_category.hpp"

namespace bredon {

/// Right modules are contravariant functors on the orbit category, left modules covariant.
enum class Variance { Right, Left };

std::string_view to_string(Variance v);

/// Functor from the orbit category to finitely generated free abelian groups.
///
/// act(f) for f : G/H -> G/K is an r_H x r_K matrix for right modules (M(f) : M(G/K) -> M(G/H))
/// and an r_K x r_H matrix for left modules.
class BredonModule {
public:
    BredonModule() = default;

    /// Stored functor table; actions indexed by global morphism id. Shapes are checked, functoriality is not.
    static BredonModule from_table(CategoryPtr cat, Variance v, std::vector<std::size_t> ranks,
                                   std::vector<IntMatrix> actions);
    static BredonModule zero(CategoryPtr cat, Variance v);
    static BredonModule trivial(CategoryPtr cat, Variance v = Variance::Right);
    /// Z[?, X]_G: basis X^H at G/H; f_{g,H,K} sends x in X^K to g x in X^H.
    static BredonModule free_on(CategoryPtr cat, std::shared_ptr<const GSet> x);
    /// Z[?, G/K_1 + ... + G/K_m] built from family objects, tagged as a free sum.
    static BredonModule free_sum(CategoryPtr cat, const std::vector<std::size_t>& objects);
    /// Left module Z[G/K, ?]: basis [G/K, G/L] at G/L, acting by postcomposition.
    static BredonModule free_left(CategoryPtr cat, std::size_t object);
    /// Left module of orbits: basis the H-orbits of X (by least point) at G/H; f_{g,H,K} sends Hy to K g^{-1} y.
    static BredonModule orbit_left(CategoryPtr cat, std::shared_ptr<const GSet> x);

    const CategoryPtr& category_ptr() const { return cat_; }
    const OrbitCategory& category() const { return *cat_; }
    Variance variance() const { return variance_; }
    std::size_t rank(std::size_t object) const { return ranks_[object]; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    std::size_t total_rank() const;

    const IntMatrix& act(const OrbitMorphism& f) const { return act(f.id); }
    const IntMatrix& act(std::size_t morphism_id) const;

    /// For modules built from a G-set: the G-set and the basis at each object
    /// (fixed points for free_on, least point of each orbit for orbit_left).
    const std::shared_ptr<const GSet>& gset() const { return gset_; }
    const std::vector<std::size_t>& basis_points(std::size_t object) const { return basis_points_[object]; }
    /// False when some stabilizer of the underlying G-set lies outside the family (module not free).
    bool stabilizers_in_family() const { return stabilizers_in_family_; }
    /// Objects K_j when the module is tagged as a sum of frees Z[?, G/K_j].
    const std::optional<std::vector<std::size_t>>& free_summands() const { return free_summands_; }

    /// Identity law and composition law over all composable pairs.
    bool is_functorial() const;

private:
    CategoryPtr cat_;
    Variance variance_ = Variance::Right;
    std::vector<std::size_t> ranks_;
    std::shared_ptr<const GSet> gset_;
    std::vector<std::vector<std::size_t>> basis_points_;
    std::vector<std::vector<std::size_t>> basis_position_; // per object: point -> basis position (npos if none)
    bool stabilizers_in_family_ = true;
    std::optional<std::vector<std::size_t>> free_summands_;
    std::optional<std::size_t> left_free_object_;

    struct Cache {
        std::mutex mutex;
        std::vector<std::unique_ptr<IntMatrix>> actions;
    };
    std::shared_ptr<Cache> cache_;

    IntMatrix compute_action(std::size_t morphism_id) const;
};

/// Natural transformation given by one matrix per object (target rank x source rank).
struct BredonMorphism {
    const BredonModule* source = nullptr;
    const BredonModule* target = nullptr;
    std::vector<IntMatrix> components;

    static BredonMorphism identity(const BredonModule& m);
};

/// True iff every naturality square commutes (all morphisms of the category are checked).
bool check_natural(const BredonMorphism& phi);

/// Componentwise direct sum.
BredonModule direct_sum(const BredonModule& a, const BredonModule& b);

} // namespace bredon
