#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bredon/chain_complex.hpp"
#include "bredon/group.hpp"
#include "bredon/orbit_category.hpp"
#include "bredon/resolution.hpp"

namespace bredon {

/// coeff * (g * cell), where cell indexes the orbit cells one dimension down.
struct CellTerm {
    long long coeff = 0;
    int g = 0;
    std::size_t cell = 0;
    friend bool operator==(const CellTerm&, const CellTerm&) = default;
};

struct OrbitCell {
    std::string id;
    Subgroup stabilizer;
    std::vector<CellTerm> boundary;
};

/// G-CW complex given by one representative cell per orbit. The boundary of the representative is a
/// combination of translates of lower representatives.
struct EquivariantCWData {
    GroupPtr group;
    std::vector<std::vector<OrbitCell>> cells; // cells[n]

    std::size_t dimension() const { return cells.empty() ? 0 : cells.size() - 1; }
    std::size_t cell_count(std::size_t n) const { return n < cells.size() ? cells[n].size() : 0; }

    /// Each boundary cell g*tau must be fixed by the stabilizer (G_sigma <= g G_tau g^{-1}) and
    /// d d = 0 on every representative. Throws InvalidArgument or BoundarySquareNonzero.
    void validate() const;
};

/// Cellular chains of the orbit space: cell counts and integer boundary matrices.
using QuotientCWData = ChainComplexZ;

/// Orbit-level sum: entry (tau, sigma) of d_n is the sum of the coefficients of the terms on tau.
QuotientCWData direct_quotient(const EquivariantCWData& x);

/// Bredon cellular chains as a free orbit complex. Throws StabilizerOutsideFamily or BoundarySquareNonzero.
FreeOrbitComplex cellular_chains(const EquivariantCWData& x, const CategoryPtr& cat);

/// Reduced homology of X^H for each object H (augmented complex, index k is degree k - 1).
struct FixedPointAcyclicity {
    std::vector<std::vector<AbGroupInvariants>> augmented_homology; // per object
    /// Largest k such that every X^H has vanishing reduced homology in degrees < k (dimension + 1 if all vanish).
    std::size_t acyclic_below = 0;
    bool contractible_fixed_sets() const;
};
FixedPointAcyclicity fixed_point_acyclicity(const FreeOrbitComplex& chains);

/// C_*(X) (x)_F Z computed by the tensor presentation, rewritten in the canonical orbit basis,
/// next to the orbit-summed quotient.
struct QuotientComparison {
    QuotientCWData direct;
    QuotientCWData via_tensor;
    bool bases_unimodular = true; // orbit generators form a basis of each C_n (x)_F Z
    bool matrices_agree = false;
};
QuotientComparison quotient_complex(const EquivariantCWData& x, const CategoryPtr& cat);

/// H_n(X/G) next to H_n^F(G; Z) with the lower bounds these imply.
struct GeometricBoundReport {
    std::vector<AbGroupInvariants> quotient_homology;   // degrees 0..valid_degree
    std::vector<AbGroupInvariants> quotient_cohomology; // degrees 0..valid_degree
    std::vector<AbGroupInvariants> bredon_homology;     // from the standard resolution, same degrees
    std::size_t valid_degree = 0; // degrees where the model computes Bredon (co)homology
    bool cross_checked = false;   // the standard resolution needs a semi-full family
    bool agrees = false;
    std::size_t hd_lower = 0;
    std::size_t cd_lower = 0; // at least hd_lower
};
GeometricBoundReport geometric_lower_bound_report(const EquivariantCWData& x, const CategoryPtr& cat,
                                                  std::size_t degree);

/// Quotient mapping telescope over stages -window..window for a chain self-map f (f[n] : C_n -> C_n).
/// Cells of degree n, stage-major: stage k cells of X_n, then prism cells e x I_k for e in X_{n-1} (k < window).
/// d(e x I_k) = d(e) x I_k + (-1)^p (f(e)_{k+1} - e_k). Throws NotChainMap.
QuotientCWData telescope(const QuotientCWData& x, const std::vector<IntMatrix>& f, std::size_t window = 3);

/// Cellular self-map f(sigma) = sum coeff * g * tau of the same dimension.
using EquivariantChainMap = std::vector<std::vector<std::vector<CellTerm>>>; // [n][sigma]
EquivariantCWData telescope(const EquivariantCWData& x, const EquivariantChainMap& f, std::size_t window = 3);

/// Attaching data for the 2-cells: one integer 1-cycle (over the 1-cells of the base) per orientable class.
struct AttachmentSpec {
    std::size_t orientable = 0;
    std::size_t non_orientable = 0;
    std::vector<std::vector<long long>> cycles; // empty: the default cycle (1, 0, ..., 0) for each cell
};
/// Q plus `orientable` 2-cells attached along the given cycles. Throws NotACycle.
QuotientCWData jpl_attach(const QuotientCWData& q, const AttachmentSpec& spec);

/// One 0-cell and one 1-cell with zero boundary.
QuotientCWData loop_quotient();
/// One 0-cell.
QuotientCWData point_quotient();
/// Loop base with k attached 2-cells; degrees[i] is the winding of cell i (defaults to 1).
QuotientCWData bs1m_quotient(std::size_t k, const std::vector<long long>& degrees = {});

/// m joins S^1 * S^1 glued consecutively along shared circles X_0, ..., X_m.
/// Cells: v_i, e_i (dimension 0, 1, d e_i = 0), then per piece i the join cells v_i*v_{i+1}, v_i*e_{i+1},
/// e_i*v_{i+1}, e_i*e_{i+1}, with d(s*t) = ds*t + (-1)^{p+1} s*dt and the augmentation on 0-cells.
QuotientCWData z2_join_quotient(std::size_t m);

/// The truncated standard resolution as equivariant cell data (cells = orbits of tuples).
EquivariantCWData standard_model(const CategoryPtr& cat, std::size_t dimension,
                                 ResolutionBase base = ResolutionBase::AllMembers);

} // namespace bredon
