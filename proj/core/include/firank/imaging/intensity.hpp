#pragma once

#include <span>

namespace firank::imaging {

struct IntensityFeatures {
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;   // n-1 denominator
    double maximum = 0.0;
    double minimum = 0.0;
    double kurtosis = 0.0;  // m4 / m2^2, population central moments
    double skewness = 0.0;  // m3 / m2^(3/2)
};

/// Seven first-order statistics of the lesion intensities.
/// Throws InsufficientSamples for fewer than 2 values and
/// DegenerateDistribution when every value is identical.
IntensityFeatures intensity_features(std::span<const double> values);

}  // namespace firank::imaging
