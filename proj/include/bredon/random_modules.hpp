#pragma once

#include <cstdint>
#include <random>

#include "bredon/bredon_module.hpp"

namespace bredon {

struct RandomModuleOptions {
    std::size_t max_summands = 2;
    /// Elementary operations used for each basis change.
    std::size_t basis_change_steps = 6;
    long long max_multiplier = 3;
};

/// Random unimodular n x n matrix and its inverse, built from elementary operations.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng, const RandomModuleOptions& opts = {});

/// Sum of a few modules drawn from trivial, permutation and free modules of the given variance,
/// then rewritten in random bases at every object. Always functorial and objectwise free.
BredonModule random_module(const CategoryPtr& cat, Variance v, std::mt19937_64& rng,
                           const RandomModuleOptions& opts = {});

/// The same functor with the basis at each object changed by P_H: new coordinates are P_H^{-1} x.
BredonModule change_basis(const BredonModule& m, const std::vector<IntMatrix>& p, const std::vector<IntMatrix>& p_inv);

} // namespace bredon
