#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/ranking.hpp>
#include <firank/rankers/params.hpp>

namespace firank::rankers {

/// Laplacian ranks ascending, every other method descending.
RankDirection direction_of(Method method) noexcept;

/// Raw per-feature scores of a score-based method (all but CFS and lasso,
/// which are order-based and go through rank()).
std::vector<double> feature_scores(const Dataset& data, Method method, const MethodParams& params = {});

/// Ranks the features of `data` with one method. Ties go to the lower feature index.
Ranking rank(const Dataset& data, Method method, const MethodParams& params = {});

}  // namespace firank::rankers
