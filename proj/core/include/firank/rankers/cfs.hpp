#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/ranking.hpp>

#include <span>

namespace firank::rankers {

/// CFS merit k * mean(r_cf) / sqrt(k + k (k-1) mean(r_ff)) of a feature subset
/// (0-based columns), given |r| feature-class and feature-feature correlations.
double cfs_merit(std::span<const std::size_t> subset, std::span<const double> r_cf, const Matrix& r_ff);

/// Absolute Pearson correlation of every feature with the 0/1 label.
std::vector<double> class_correlations(const Dataset& data);
/// Absolute Pearson correlation between every pair of features.
Matrix feature_correlations(const Dataset& data);

/**
 * Forward selection on CFS merit. The inclusion order is the ranking; when no
 * candidate improves the merit the remaining features follow by |r_cf|
 * descending. Scores hold the merit of the ranking prefix ending at each feature.
 */
Ranking cfs_ranking(const Dataset& data);

}  // namespace firank::rankers
