#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bredon/abelian.hpp"
#include "bredon/bredon_module.hpp"
#include "bredon/family.hpp"
#include "bredon/resolution.hpp"

namespace bredon {

struct HomologyOptions {
    ResolutionBase base = ResolutionBase::MaximalClasses;
    std::size_t max_orbits_per_degree = 2'000'000;
    std::size_t threads = 1;
};

struct HomologyReport {
    std::vector<AbGroupInvariants> groups; // degrees 0..n
    std::size_t truncation = 0;            // length of the resolution used
    std::vector<std::size_t> orbit_counts; // free generators of the resolution per degree
    std::vector<std::size_t> chain_ranks;  // ranks of the (co)chain complex over Z
};

/// H_k^F(G; N) = Tor_k(Z_F, N) for k = 0..degree, from the standard resolution. N is a left module.
HomologyReport bredon_homology(const BredonModule& left, std::size_t degree, const HomologyOptions& opts = {});
/// H^k_F(G; M) = Ext^k(Z_F, M) for k = 0..degree. M is a right module.
HomologyReport bredon_cohomology(const BredonModule& right, std::size_t degree, const HomologyOptions& opts = {});

/// The same computations over an arbitrary free resolution (degree must be below its top).
std::vector<AbGroupInvariants> homology_over(const FreeOrbitComplex& resolution, const BredonModule& left,
                                             std::size_t degree);
std::vector<AbGroupInvariants> cohomology_over(const FreeOrbitComplex& resolution, const BredonModule& right,
                                               std::size_t degree);

/// `H_n = ...` lines, one per degree.
std::string format_homology(const std::vector<AbGroupInvariants>& groups, const std::string& symbol = "H_");

struct CdZeroComponent {
    std::vector<std::size_t> members; // family member indices
    bool unique_maximal = false;
    std::size_t maximal = 0;          // valid when unique_maximal
    bool self_normalizing = false;
};

/// Z_F is projective iff each inclusion component of F has a unique maximal member equal to its normaliser.
struct CdZeroReport {
    bool cd_zero = false;
    std::vector<CdZeroComponent> components;
    bool semi_full = false;
    bool contains_whole_group = false;
    /// For semi-full families the component criterion must agree with G in F.
    bool cross_check_agrees = true;
    std::string explanation;
};
CdZeroReport is_cd_zero(const Family& family);

struct BatteryResult {
    std::string label;
    Variance variance = Variance::Right;
    std::vector<AbGroupInvariants> groups; // Ext (right modules) or Tor (left modules), degrees 0..N
};

/// Lower bounds only: cd_lower is the largest d <= N with some Ext^d nonzero, hd_lower the same for Tor.
struct DimensionBounds {
    std::size_t degree = 0;
    std::size_t cd_lower = 0;
    std::size_t hd_lower = 0;
    bool cd_zero = false;
    std::vector<BatteryResult> battery;
};
/// Default battery: the trivial module and the free modules on class representatives of F, in both variances.
DimensionBounds dimension_bounds(const CategoryPtr& cat, std::size_t degree, const HomologyOptions& opts = {});
DimensionBounds dimension_bounds(const CategoryPtr& cat, std::size_t degree, const std::vector<BredonModule>& battery,
                                 const std::vector<std::string>& labels, const HomologyOptions& opts = {});

} // namespace bredon
