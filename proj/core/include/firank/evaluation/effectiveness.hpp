#pragma once

#include <firank/core/ranking.hpp>
#include <firank/evaluation/subsets.hpp>

namespace firank::evaluation {

/**
 * eff = m / n_prefix: m is the size of the optimal subset, n_prefix the
 * shortest ranking prefix containing all of it. Duplicate indices in
 * `optimal` count once. Throws InvalidIndex for an index outside {1..d} and
 * EmptyInput for an empty subset.
 */
EffResult effectiveness(const Ranking& ranking, const FeatureSubset& optimal);

}  // namespace firank::evaluation
