#include <firank/imaging/intensity.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace firank::imaging {

IntensityFeatures intensity_features(std::span<const double> values) {
    const auto n = values.size();
    if (n < 2) fail(ErrorCode::InsufficientSamples, "intensity statistics need at least 2 pixels");

    IntensityFeatures f;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    f.minimum = *lo;
    f.maximum = *hi;
    if (f.minimum == f.maximum) {
        fail(ErrorCode::DegenerateDistribution, "all pixels identical; kurtosis and skewness undefined");
    }

    double sum = 0.0;
    for (double v : values) sum += v;
    f.mean = sum / static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double b = v - f.mean;
        const double b2 = b * b;
        m2 += b2;
        m3 += b2 * b;
        m4 += b2 * b2;
    }
    f.std_dev = std::sqrt(m2 / static_cast<double>(n - 1));
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    f.kurtosis = m4 / (m2 * m2);
    f.skewness = m3 / std::pow(m2, 1.5);

    std::vector<double> sorted(values.begin(), values.end());
    const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(sorted.begin(), mid, sorted.end());
    f.median = *mid;
    if (n % 2 == 0) {
        const double below = *std::max_element(sorted.begin(), mid);
        f.median = 0.5 * (below + f.median);
    }
    return f;
}

}  // namespace firank::imaging
