#include <firank/evaluation/effectiveness.hpp>
#include <firank/error.hpp>

#include <algorithm>

namespace firank::evaluation {

EffResult effectiveness(const Ranking& ranking, const FeatureSubset& optimal) {
    if (optimal.empty()) fail(ErrorCode::EmptyInput, "optimal subset is empty");
    const auto d = ranking.feature_count();
    FeatureSubset unique = optimal;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    EffResult eff;
    eff.m = static_cast<int>(unique.size());
    for (int idx : unique) {
        const auto pos = (idx >= 1 && static_cast<std::size_t>(idx) <= d) ? ranking.position_of(idx) : 0;
        if (pos == 0) {
            fail(ErrorCode::InvalidIndex, "feature index " + std::to_string(idx) + " is not in the ranking of " +
                                              std::to_string(d) + " features");
        }
        eff.n_prefix = std::max(eff.n_prefix, static_cast<int>(pos));
    }
    return eff;
}

}  // namespace firank::evaluation
