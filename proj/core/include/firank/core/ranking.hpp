#pragma once

#include <string>
#include <vector>

namespace firank {

/// Importance ordering of d features produced by one method.
struct Ranking {
    std::string method;
    /// 1-based feature indices, most important first. A permutation of {1..d}.
    std::vector<int> order;
    /// Per-feature score aligned to feature index (scores[j] belongs to feature j+1).
    std::vector<double> scores;

    std::size_t feature_count() const noexcept { return order.size(); }
    /// 1-based position of feature `index` (1-based) in `order`; 0 if absent.
    std::size_t position_of(int index) const noexcept;
};

enum class RankDirection { Descending, Ascending };

/// Orders feature indices by score in the given direction, ties by ascending index.
/// NaN scores are placed last.
std::vector<int> order_by_score(const std::vector<double>& scores, RankDirection direction);

/// True when `order` is a permutation of {1..d}.
bool is_permutation_of_features(const std::vector<int>& order, std::size_t d);

/// Effectiveness of a ranking for a known optimal subset: eff = m / n_prefix.
struct EffResult {
    int m = 0;
    int n_prefix = 0;

    double value() const noexcept { return static_cast<double>(m) / static_cast<double>(n_prefix); }
    /// Unreduced fraction "m/n", as printed in ranking tables.
    std::string fraction() const;

    friend bool operator==(const EffResult&, const EffResult&) = default;
};

}  // namespace firank
