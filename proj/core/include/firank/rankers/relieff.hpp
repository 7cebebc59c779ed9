#pragma once

#include <firank/core/dataset.hpp>

#include <vector>

namespace firank::rankers {

/**
 * Deterministic ReliefF over every sample.
 *
 * Features are min-max normalized, neighbours found by Manhattan distance.
 * For each sample the k nearest hits (same class, excluding rows identical
 * to the sample) and k nearest misses per other class are taken; a feature
 * loses the mean absolute difference to hits and gains the prior-weighted
 * mean absolute difference to misses. Weights are averaged over samples.
 * Neighbour ties are broken by the row values, so the result does not
 * depend on sample order. Each class needs more than k samples.
 */
std::vector<double> relieff_weights(const Dataset& data, std::size_t k = 10);

}  // namespace firank::rankers
