#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/rng.hpp>

#include <string>
#include <vector>

namespace firank {

struct SynthSpec {
    std::size_t samples = 200;
    std::size_t features = 15;
    /// 1-based indices of the features the label depends on.
    std::vector<int> informative = {2, 7, 13};
    /// Standard deviation of the Gaussian noise added to the linear score.
    double noise = 1.0;
    RngSeed seed{};
};

/**
 * Planted binary dataset: every feature is iid N(0,1); the label is
 * 1 when sum of the informative features + noise * N(0,1) > 0.
 * Throws InvalidIndex for informative indices outside {1..d}.
 */
Dataset make_synthetic_dataset(const SynthSpec& spec);

/// `key=value` lines describing the generator, for header comments.
std::vector<std::string> describe(const SynthSpec& spec);

}  // namespace firank
