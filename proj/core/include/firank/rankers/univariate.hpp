#pragma once

#include <firank/core/dataset.hpp>

#include <span>

namespace firank::rankers {

/// Kruskal-Wallis H with midranks and tie correction; 0 when every value ties.
double kruskal_wallis_score(std::span<const double> values, std::span<const Label> labels);

/// Classical Fisher score: sum_c n_c (mu_c - mu)^2 / (sum_c n_c var_c + epsilon),
/// population variances. This is the per-feature score, not the generalized QP form.
double fisher_score(std::span<const double> values, std::span<const Label> labels, double epsilon = 1e-12);

/// Gini impurity reduction over an equal-frequency discretization into `bins`.
double gini_score(std::span<const double> values, std::span<const Label> labels, std::size_t bins = 10);

}  // namespace firank::rankers
