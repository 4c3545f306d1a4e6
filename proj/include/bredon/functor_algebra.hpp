#pragma once

#include <cstddef>
#include <vector>

#include "bredon/abelian.hpp"
#include "bredon/bredon_module.hpp"
#include "bredon/smith.hpp"

namespace bredon {

/// Cokernel of Q : Z^rels -> Z^gens (Q is gens x rels) with explicit coordinates.
/// With U Q V = D, class coordinates of v are U v; entries below `rank` are read modulo the divisors.
struct Cokernel {
    SmithForm snf;
    AbGroupInvariants invariants;
    std::size_t gens = 0;

    static Cokernel of(const IntMatrix& q);

    std::size_t free_rank() const { return gens - snf.rank; }
    /// free_rank x gens: coordinates in the free quotient.
    IntMatrix projection() const;
    /// gens x free_rank: a splitting of the projection.
    IntMatrix section() const;
    /// Torsion coordinates (one per divisor > 1) followed by free coordinates.
    std::vector<Integer> classify(const std::vector<Integer>& v) const;
};

/// M (x)_F N for a right module M and a left module N, as the cokernel of the P/Q presentation.
/// Generator (H, a, b) = m_a (x) n_b at object H.
struct TensorOverFamily {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> m_ranks;
    std::vector<std::size_t> n_ranks;
    IntMatrix relations; // gens x relations
    Cokernel coker;

    std::size_t generator_count() const { return relations.rows(); }
    std::size_t generator(std::size_t object, std::size_t a, std::size_t b) const
    {
        return offsets[object] + a * n_ranks[object] + b;
    }
    const AbGroupInvariants& invariants() const { return coker.invariants; }
};

TensorOverFamily tensor_over_family(const BredonModule& m, const BredonModule& n);

/// phi (x) id_N on P-generators, as a (gens of target) x (gens of source) matrix.
IntMatrix tensor_generator_map(const BredonMorphism& phi, const TensorOverFamily& src,
                               const TensorOverFamily& dst);
/// The induced map on the free quotients of the two cokernels.
IntMatrix induced_on_free_parts(const TensorOverFamily& src, const TensorOverFamily& dst, const IntMatrix& gen_map);

/// mor(M, N) for modules of equal variance. Unknown eta_H[i][j] sits at offsets[H] + i * rank_M(H) + j.
struct NaturalTransformations {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> m_ranks;
    std::vector<std::size_t> n_ranks;
    IntMatrix basis;       // unknowns x k; columns span the (saturated) solution lattice
    IntMatrix coordinates; // k x unknowns; coordinates * basis = I
    AbGroupInvariants invariants;

    std::size_t unknown_count() const { return basis.rows(); }
    std::size_t dimension() const { return basis.cols(); }
    /// Component eta_H of the j-th basis transformation.
    IntMatrix component(std::size_t j, std::size_t object) const;
    /// Solution vector -> coordinates in the basis; throws unless the vector is natural.
    std::vector<Integer> coordinates_of(const std::vector<Integer>& eta) const;
};

NaturalTransformations mor_modules(const BredonModule& m, const BredonModule& n);

/// Objectwise tensor over Z with diagonal action.
BredonModule tensor_over_Z(const BredonModule& m, const BredonModule& n);

/// O_{F cap K} K viewed inside O_F G through I_K.
struct SubgroupContext {
    SubgroupEmbedding embedding;
    CategoryPtr parent;
    CategoryPtr sub;
    std::vector<std::size_t> object_in_parent;
    std::vector<std::size_t> morphism_in_parent;
};

/// Throws FamilyNotCompatible unless H cap K lies in F for every H in F.
SubgroupContext restriction_context(const CategoryPtr& parent, const Subgroup& k);

BredonModule restrict_IK(const BredonModule& m, const SubgroupContext& ctx);
/// Sum of frees Z[?, K/L_j]_K |-> Z[?, G/L_j]_G; throws NotFreeSum for untagged modules.
BredonModule induce_free_sum(const BredonModule& m, const SubgroupContext& ctx);
/// General induction: right M |-> M (x)_{F cap K} res Z[G/?, ??], left N |-> res Z[??, G/?] (x)_{F cap K} N.
/// Throws NotObjectwiseFree if some value has torsion.
BredonModule induce_IK(const BredonModule& m, const SubgroupContext& ctx);
/// Right M |-> mor_{F cap K}(res Z[??, G/?], M).
BredonModule coinduce_IK(const BredonModule& m, const SubgroupContext& ctx);

/// Pullback along O_{F1 x F2}(G1 x G2) -> O_{Fi} Gi, (H1 x H2) |-> Hi.
BredonModule pullback_along_projection(const BredonModule& m, const CategoryPtr& product_cat,
                                       const ProductGroup& pg, int factor);

} // namespace bredon
