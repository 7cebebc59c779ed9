#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/rng.hpp>

#include <span>
#include <vector>

namespace firank::evaluation {

/// k disjoint folds of 0-based sample indices (each sorted) covering every sample.
struct FoldSplit {
    std::vector<std::vector<std::size_t>> folds;
    RngSeed seed{};

    std::size_t fold_count() const noexcept { return folds.size(); }
    /// Complement of fold `f`, sorted.
    std::vector<std::size_t> train_indices(std::size_t f) const;
};

/**
 * Stratified k-fold split. Each class is shuffled with the seeded generator
 * and dealt round-robin; the second class continues where the first stopped,
 * so fold sizes differ by at most one and each fold's class count is the
 * floor or ceiling of n_c / k. Throws InsufficientClass when a class has
 * fewer than k samples, InvalidArgument when k < 2.
 */
FoldSplit stratified_folds(std::span<const Label> labels, std::size_t k, RngSeed seed);

}  // namespace firank::evaluation
