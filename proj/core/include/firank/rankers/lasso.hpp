#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/ranking.hpp>
#include <firank/rankers/params.hpp>

namespace firank::rankers {

/// Solution path of the lasso on z-scored features and centred 0/1 labels.
struct LassoPath {
    double lambda_max = 0.0;
    std::vector<double> lambdas;
    /// coefficients[g][j]: coefficient of feature j (0-based) at lambdas[g].
    std::vector<std::vector<double>> coefficients;
};

/// Objective (1/2n)|y - X b|^2 + lambda |b|_1 by cyclic coordinate descent with
/// warm starts. lambda_max = max_j |<x_j, y>| / n. Throws InvalidGrid.
LassoPath lasso_path(const Dataset& data, const LassoGrid& grid);

/// Ranks by first activation along the path; ties (same grid step) and
/// never-active features by |coefficient| at the last lambda, then index.
/// Scores are the lambda of first activation (0 when never active).
Ranking lasso_ranking(const Dataset& data, const LassoGrid& grid = LassoGrid::log_spaced());

}  // namespace firank::rankers
