#pragma once

#include <cstddef>
#include <vector>

#include "bredon/functor_algebra.hpp"
#include "bredon/homology.hpp"

namespace bredon {

/// Yoneda collapse at one object K. For a right module M:
///   mor(Z[?, G/K], M) -> M(G/K), eta |-> eta_K(eK), and M (x)_F Z[G/K, ?] <- M(G/K), m |-> m (x) id.
/// For a left module N the free modules swap variance. Each map must be an isomorphism onto a free group.
struct YonedaResult {
    std::size_t object = 0;
    std::size_t rank = 0; // rank of the module at G/K
    AbGroupInvariants mor_invariants;
    AbGroupInvariants tensor_invariants;
    bool mor_collapses = false;
    bool tensor_collapses = false;
};
YonedaResult yoneda_check(const BredonModule& m, std::size_t object);

/// H_n^{F cap K}(K; Z) against H_n^F(G; ind Z) and H^n_{F cap K}(K; Z) against H^n_F(G; coind Z).
struct ShapiroReport {
    std::vector<AbGroupInvariants> homology_sub;
    std::vector<AbGroupInvariants> homology_induced;
    std::vector<AbGroupInvariants> cohomology_sub;
    std::vector<AbGroupInvariants> cohomology_coinduced;
    bool agrees() const { return homology_sub == homology_induced && cohomology_sub == cohomology_coinduced; }
};
ShapiroReport shapiro_check(const CategoryPtr& cat, const Subgroup& k, std::size_t degree,
                            const HomologyOptions& opts = {});

/// Kunneth sequence 0 -> (+) H_p (x) H'_q -> H_n -> (+) Tor(H_p, H'_q) -> 0 for left modules over two groups.
struct KunnethDegree {
    AbGroupInvariants left_end;  // p + q = n
    AbGroupInvariants middle;    // H_n^{F1 x F2}(G1 x G2; N1 (x) N2) from a resolution over the product
    AbGroupInvariants right_end; // p + q = n - 1
    AbGroupInvariants chain_level; // homology of the tensor product of the two factor complexes
    bool orders_consistent = false; // free ranks add, torsion orders multiply
    bool splits = false;            // middle = left_end + right_end
    bool chain_level_matches = false;
};
struct KunnethReport {
    std::vector<AbGroupInvariants> first;
    std::vector<AbGroupInvariants> second;
    std::vector<KunnethDegree> degrees;
    bool consistent() const;
};
KunnethReport kunneth_check(const BredonModule& n1, const BredonModule& n2, std::size_t degree,
                            const HomologyOptions& opts = {});

} // namespace bredon
