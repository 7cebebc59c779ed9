#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace firank::evaluation {

/// Sorted 1-based feature indices.
using FeatureSubset = std::vector<int>;

/// sum_{k=1}^{kmax} C(d, k).
std::uint64_t subset_count(int d, int kmax);

/// Every subset of {1..d} with size 1..kmax, ordered by size then
/// lexicographically. Throws InvalidBound unless 1 <= kmax <= d.
std::vector<FeatureSubset> enumerate_subsets(int d, int kmax);

/// Streaming form of enumerate_subsets; same order.
void for_each_subset(int d, int kmax, const std::function<void(const FeatureSubset&)>& visit);

}  // namespace firank::evaluation
