#pragma once

#include <span>
#include <string_view>

namespace firank::rankers {

/// Two-class separability criteria for a single feature.
enum class Criterion { TTest, Entropy, Bhattacharyya, Roc, Wilcoxon };

/**
 * Separability of one feature between class 0 and class 1 samples.
 *
 * - TTest: Welch statistic |m0 - m1| / sqrt(s0^2/n0 + s1^2/n1).
 * - Entropy: symmetric Gaussian Kullback-Leibler divergence KL(p|q) + KL(q|p).
 * - Bhattacharyya: Gaussian Bhattacharyya distance.
 * - Roc: |AUC - 0.5|, area between the empirical ROC and the diagonal.
 * - Wilcoxon: |U - n0 n1 / 2| over the tie-corrected standard deviation of U.
 *
 * Variances are sample variances floored at `epsilon`. All criteria are
 * symmetric in the two classes. Each class needs at least 2 samples
 * (InsufficientClass).
 */
double separability_score(std::span<const double> class0, std::span<const double> class1,
                          Criterion criterion, double epsilon = 1e-12);

/// Gaussian Bhattacharyya distance from moments.
double bhattacharyya_distance(double mean0, double var0, double mean1, double var1);
/// KL(p | q) + KL(q | p) for two Gaussians given by moments.
double symmetric_gaussian_kl(double mean0, double var0, double mean1, double var1);

}  // namespace firank::rankers
