#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bredon/bredon_module.hpp"
#include "bredon/chain_complex.hpp"
#include "bredon/orbit_category.hpp"

namespace bredon {

/// One summand of the image of a free generator: coeff * (generator of cell `target`) moved by `morphism`.
/// `morphism` is f_{g, G_sigma, G_tau}, recording the translate g * tau.
struct FreeRecord {
    long long coeff = 0;
    std::size_t target = 0;
    std::size_t morphism = 0;

    friend bool operator==(const FreeRecord&, const FreeRecord&) = default;
};

/// Chain complex of free Bredon modules C_n = sum over cells sigma of Z[?, G/G_sigma], stored orbit-wise.
/// Evaluated at G/H the basis of C_n is the disjoint union over sigma of hom(G/H, G/G_sigma).
class FreeOrbitComplex {
public:
    FreeOrbitComplex() = default;
    explicit FreeOrbitComplex(CategoryPtr cat) : cat_(std::move(cat)) {}

    const CategoryPtr& category_ptr() const { return cat_; }
    const OrbitCategory& category() const { return *cat_; }
    std::size_t top() const { return cells_.empty() ? 0 : cells_.size() - 1; }
    std::size_t cell_count(std::size_t n) const { return n < cells_.size() ? cells_[n].size() : 0; }
    /// Object (stabilizer) of each cell in degree n.
    const std::vector<std::size_t>& cells(std::size_t n) const { return cells_.at(n); }
    const std::vector<FreeRecord>& boundary(std::size_t n, std::size_t cell) const { return boundary_.at(n).at(cell); }

    /// Appends degree n = top()+1 (or 0 for an empty complex). Records are merged and sorted.
    void add_degree(std::vector<std::size_t> cells, std::vector<std::vector<FreeRecord>> boundary);

    /// d_{n-1} d_n = 0 on every generator (which by Yoneda is d d = 0 at every object).
    bool squares_to_zero(std::size_t n) const;
    /// Throws BoundarySquareNonzero.
    void validate() const;

    BredonModule module(std::size_t n) const;
    /// d_n : C_n -> C_{n-1} as a natural transformation (dense components).
    BredonMorphism differential(std::size_t n, const BredonModule& source, const BredonModule& target) const;

    /// Basis size of C_n(G/H) and offsets of the cell blocks.
    std::vector<std::size_t> evaluated_offsets(std::size_t n, std::size_t object) const;
    /// Streams the columns of d_n evaluated at G/H: fn(column, entries as (row, value)).
    void for_each_evaluated_column(
        std::size_t n, std::size_t object,
        const std::function<void(std::size_t, const std::vector<std::pair<std::size_t, long long>>&)>& fn) const;
    SparseMatrix evaluate(std::size_t n, std::size_t object) const;
    /// Z <- C_0(G/H) <- ... <- C_top(G/H); index k of the result is degree k - 1.
    ChainComplexZ evaluate_augmented(std::size_t object) const;

    /// C (x)_F N for a left module N, using Z[?, G/K] (x)_F N = N(G/K).
    ChainComplexZ tensor_with(const BredonModule& left) const;
    /// mor_F(C, M) for a right module M, using mor(Z[?, G/K], M) = M(G/K).
    CochainComplexZ hom_into(const BredonModule& right) const;

private:
    CategoryPtr cat_;
    std::vector<std::vector<std::size_t>> cells_;
    std::vector<std::vector<std::vector<FreeRecord>>> boundary_; // index 0 empty
};

/// Exactness report for one object of a resolution.
struct ObjectExactness {
    std::size_t object = 0;
    std::size_t basis_size_top = 0;
    bool squares_to_zero = true;
    bool homotopy_identity = true; // d h + h d = id on C_{-1}..C_{N-1}
    bool matches_orbit_data = true; // orbit-wise evaluation equals the tuple description
    /// Augmented homology H_{-1}..H_{N-1} where computed by elimination (empty if over budget).
    std::vector<AbGroupInvariants> homology;
    bool exact() const;
};

/// Which coset spaces make up Delta_0. Every choice gives a free resolution of Z_F for a semi-full family;
/// smaller bases give far fewer orbits in high degrees.
enum class ResolutionBase {
    AllMembers,           // G/K for every K in F
    ClassRepresentatives, // one K per conjugacy class
    MaximalClasses,       // one K per conjugacy class of maximal members
};

struct ResolutionOptions {
    ResolutionBase base = ResolutionBase::AllMembers;
    std::size_t max_orbits_per_degree = 2'000'000;
    std::size_t threads = 1;
};

/// Standard resolution of Z_F: Delta_0 = disjoint union of G/K over K in F (or over a subset, see
/// ResolutionBase), Delta_n = Delta_0^{n+1}
/// with the diagonal action and d = sum (-1)^i (delete coordinate i).
class StandardResolution {
public:
    /// Throws FamilyNotSemiFull or BudgetExceeded.
    static StandardResolution build(CategoryPtr cat, std::size_t length, const ResolutionOptions& opts = {});

    const FreeOrbitComplex& complex() const { return complex_; }
    std::size_t length() const { return complex_.top(); }
    const OrbitCategory& category() const { return complex_.category(); }

    /// Objects K whose coset spaces G/K make up Delta_0, in block order.
    const std::vector<std::size_t>& base_objects() const { return base_objects_; }
    /// Points of Delta_0: point p is the coset `point_coset(p)` of G/K for K = `point_object(p)`.
    std::size_t base_size() const { return point_block_.size(); }
    std::size_t point_object(std::size_t p) const { return base_objects_[point_block_[p]]; }
    std::size_t point_coset(std::size_t p) const { return point_coset_[p]; }
    std::size_t act_on_point(int g, std::size_t p) const;
    /// Delta_0^H, ascending.
    std::vector<std::size_t> base_fixed_points(std::size_t object) const;

    std::size_t orbit_count(std::size_t n) const { return complex_.cell_count(n); }
    /// Lexicographically least tuple in the orbit.
    std::vector<std::size_t> orbit_tuple(std::size_t n, std::size_t orbit) const;
    /// (orbit, g) with tuple = g * orbit_tuple(orbit).
    std::pair<std::size_t, int> locate(const std::vector<std::size_t>& tuple) const;

    /// Tuple-level checks at G/H: d d = 0, contracting homotopy, orbit-data agreement and,
    /// when the evaluated matrices are at most `snf_budget` columns, augmented homology by elimination.
    ObjectExactness certify(std::size_t object, std::size_t snf_budget = 200'000) const;
    /// Every tuple's stabilizer equals the intersection of its coordinates' stabilizers and lies in F.
    bool verify_stabilizers(std::size_t n) const;

private:
    FreeOrbitComplex complex_;
    std::vector<std::size_t> base_objects_;
    std::vector<std::size_t> point_block_;
    std::vector<std::size_t> point_coset_;
    std::vector<std::size_t> block_offset_;
    std::vector<std::vector<std::uint32_t>> reps_; // reps_[n]: concatenated (n+1)-tuples
    // locate_[n][tau * base + p] = (child orbit in degree n+1, s) with (rep_tau, p) = s * child rep
    std::vector<std::vector<std::uint32_t>> locate_child_;
    std::vector<std::vector<int>> locate_elem_;
};

/// Exact number of G-orbits on Delta_n (Burnside); used for dry runs and budgets.
Integer estimate_standard_orbits(const OrbitCategory& cat, std::size_t n, ResolutionBase base = ResolutionBase::AllMembers);

/// For each n: the orbit count of Delta_n and the number of points of Delta_n.
struct ResolutionSizeEstimate {
    std::vector<Integer> orbits;
    std::vector<Integer> points;
};
ResolutionSizeEstimate estimate_standard_resolution(const OrbitCategory& cat, std::size_t length,
                                                    ResolutionBase base = ResolutionBase::AllMembers);
/// Objects used for Delta_0 under the given choice, ascending.
std::vector<std::size_t> resolution_base_objects(const OrbitCategory& cat, ResolutionBase base);

/// Kernel of d_n evaluated at each object, with a check that the orbit-category action preserves it.
struct KernelReport {
    std::vector<IntMatrix> bases; // per object: columns span ker d_n(G/H)
    std::vector<std::size_t> ranks;
    bool action_preserves_kernels = true;
};
KernelReport kernel_at(const FreeOrbitComplex& c, std::size_t n);

} // namespace bredon
