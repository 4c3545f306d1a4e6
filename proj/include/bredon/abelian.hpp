#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bredon/matrix.hpp"

namespace bredon {

/// Finitely generated abelian group Z^b + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and d_i >= 2.
struct AbGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    /// Canonical form of Z^b plus the given cyclic summands (orders 0 count as Z, 1 is dropped).
    static AbGroupInvariants from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders);

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    Integer torsion_order() const;

    /// `Z^b + Z/d1 + ...`, `Z` for b = 1, `0` for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbGroupInvariants&, const AbGroupInvariants&) = default;
};

AbGroupInvariants direct_sum(const AbGroupInvariants& a, const AbGroupInvariants& b);
AbGroupInvariants tensor(const AbGroupInvariants& a, const AbGroupInvariants& b);
AbGroupInvariants tor1(const AbGroupInvariants& a, const AbGroupInvariants& b);

/// Parses the `to_string` grammar back.
AbGroupInvariants parse_invariants(const std::string& text);

} // namespace bredon
