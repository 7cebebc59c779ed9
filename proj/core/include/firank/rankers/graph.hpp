#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/ranking.hpp>

namespace firank::rankers {

/// Symmetric, non-negative d x d feature graph with zero diagonal.
struct FeatureAffinity {
    Matrix matrix;
};

/**
 * A_ij = alpha * max(s_i, s_j) + (1 - alpha) * (1 - |rho_ij|), i != j, where s
 * is the min-max normalized Fisher score (all ones when every score is equal)
 * and rho the Spearman correlation between features i and j.
 */
FeatureAffinity feature_affinity(const Dataset& data, double alpha = 0.5, double epsilon = 1e-12);

struct PerronResult {
    Vector vector;          // unit 1-norm, non-negative
    double eigenvalue = 0;  // spectral radius of A
    std::size_t iterations = 0;
};

/// Dominant eigenvector of a non-negative symmetric matrix by power iteration
/// on A + I until the 1-norm change drops below `tol`. A zero matrix yields the
/// uniform vector. Throws ConvergenceFailure after `max_iter` iterations.
PerronResult perron_vector(const Matrix& a, double tol = 1e-10, std::size_t max_iter = 10000);

/// Eigenvector centrality of each feature.
Vector ecfs_scores(const FeatureAffinity& affinity);
/// Row sums of S = (I - r A)^-1 - I with r = 0.9 / rho(A); zeros when A = 0.
Vector inffs_energies(const FeatureAffinity& affinity);

Ranking ecfs_ranking(const Dataset& data, double alpha = 0.5, double epsilon = 1e-12);
Ranking inffs_ranking(const Dataset& data, double alpha = 0.5, double epsilon = 1e-12);

}  // namespace firank::rankers
