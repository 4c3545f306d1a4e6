#pragma once

#include <cstddef>
#include <vector>

#include "bredon/abelian.hpp"
#include "bredon/matrix.hpp"
#include "bredon/smith.hpp"

namespace bredon {

/// Complex of free abelian groups C_0 <- C_1 <- ... <- C_top.
/// `boundary(n)` is d_n : C_n -> C_{n-1}, a ranks[n-1] x ranks[n] matrix, for 1 <= n <= top.
class ChainComplexZ {
public:
    ChainComplexZ() = default;
    explicit ChainComplexZ(std::vector<std::size_t> ranks);

    std::size_t top() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    std::size_t rank(std::size_t n) const { return ranks_.at(n); }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    void set_boundary(std::size_t n, SparseMatrix d);
    const SparseMatrix& boundary(std::size_t n) const { return boundaries_.at(n); }

    /// Throws BoundaryMismatch if some d_{n-1} d_n is nonzero.
    void validate() const;
    bool squares_to_zero() const;

    /// ker d_n / im d_{n+1}.
    AbGroupInvariants homology(std::size_t n, const SparseEliminationOptions& opts = {}) const;
    /// H_0..H_top, each boundary reduced once.
    std::vector<AbGroupInvariants> homology_all(const SparseEliminationOptions& opts = {}) const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<SparseMatrix> boundaries_; // index 0 unused
};

/// Cochain complex C^0 -> C^1 -> ... -> C^top; `coboundary(n)` is delta^n : C^{n-1} -> C^n.
class CochainComplexZ {
public:
    CochainComplexZ() = default;
    explicit CochainComplexZ(std::vector<std::size_t> ranks);

    std::size_t top() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    std::size_t rank(std::size_t n) const { return ranks_.at(n); }
    void set_coboundary(std::size_t n, SparseMatrix d);
    const SparseMatrix& coboundary(std::size_t n) const { return coboundaries_.at(n); }

    void validate() const;
    /// ker delta^{n+1} / im delta^n.
    AbGroupInvariants cohomology(std::size_t n, const SparseEliminationOptions& opts = {}) const;
    std::vector<AbGroupInvariants> cohomology_all(const SparseEliminationOptions& opts = {}) const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<SparseMatrix> coboundaries_;
};

/// Homology at a group of rank `dim` given the incoming and outgoing maps' divisors.
AbGroupInvariants homology_from_divisors(std::size_t dim, const std::vector<Integer>& incoming,
                                         std::size_t outgoing_rank);

/// Tensor product over Z of two complexes (Koszul sign on the second factor's boundary).
ChainComplexZ tensor_complexes(const ChainComplexZ& a, const ChainComplexZ& b, std::size_t top);

} // namespace bredon
