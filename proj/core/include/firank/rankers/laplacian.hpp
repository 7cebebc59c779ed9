#pragma once

#include <firank/core/dataset.hpp>

#include <optional>
#include <vector>

namespace firank::rankers {

/**
 * Laplacian score per feature; smaller means more locality preserving.
 *
 * Builds a k-nearest-neighbour graph on z-scored samples (union
 * symmetrized) with heat-kernel weights exp(-|xi - xj|^2 / t). When `t` is
 * absent it is the mean squared pairwise distance. A feature whose
 * D-weighted centred values vanish (a constant feature) scores +inf.
 * Throws InsufficientSamples when n <= k.
 */
std::vector<double> laplacian_scores(const Dataset& data, std::size_t k = 5,
                                     std::optional<double> t = std::nullopt, double epsilon = 1e-12);

}  // namespace firank::rankers
