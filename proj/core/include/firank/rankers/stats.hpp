#pragma once

#include <span>
#include <vector>

namespace firank::rankers {

/// 1-based average ranks ("midranks") of the values.
struct MidRanks {
    std::vector<double> ranks;
    /// Sum over tie groups of t^3 - t.
    double tie_term = 0.0;
};

MidRanks midranks(std::span<const double> values);

double mean(std::span<const double> values);
/// Sample variance (n-1 denominator).
double sample_variance(std::span<const double> values);
/// Population variance (n denominator).
double population_variance(std::span<const double> values);

/// Pearson correlation; 0 when either side has zero variance.
double pearson(std::span<const double> a, std::span<const double> b);
/// Pearson correlation of midranks.
double spearman(std::span<const double> a, std::span<const double> b);

/// Mann-Whitney AUC of `positive` scoring above `negative`, ties count half.
double rank_auc(std::span<const double> negative, std::span<const double> positive);

}  // namespace firank::rankers
