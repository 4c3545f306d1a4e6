#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bredon/matrix.hpp"

namespace bredon {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::size_t rank = 0;

    std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal of the Smith form (with multiplicity, including units).
std::vector<Integer> elementary_divisors(const IntMatrix& a);

struct SparseEliminationOptions {
    /// Largest rows*cols allowed for the dense core left after unit-pivot elimination.
    std::size_t dense_core_budget = 4'000'000;
};

/// Same as the dense overload but runs unit-pivot sparse elimination first.
std::vector<Integer> elementary_divisors(const SparseMatrix& a, const SparseEliminationOptions& opts = {});

std::size_t rank_of(const IntMatrix& a);

/// Columns form a basis of the integer kernel {x : A x = 0}; the lattice is saturated.
IntMatrix kernel_basis(const IntMatrix& a);

/// Integer solution of A x = b, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

} // namespace bredon
