#pragma once

#include <firank/imaging/glcm.hpp>
#include <firank/imaging/lesion_image.hpp>

#include <array>
#include <string>
#include <string_view>

namespace firank::imaging {

inline constexpr std::size_t kFeatureCount = 15;

/// Feature names in extraction order; index k (1-based) is the k-th feature.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "i_mean",      "i_median",      "i_std_dev",   "i_maximum",     "i_minimum",
    "i_kurtosis",  "i_skewness",    "s_area",      "s_perimeter",   "s_circularity",
    "s_elongation", "s_form",       "t_contrast",  "t_correlation", "t_entropy",
};

struct FeatureVector {
    std::array<double, kFeatureCount> values{};

    /// 1-based access matching the feature numbering.
    double at(std::size_t index) const { return values.at(index - 1); }
    double operator[](std::string_view name) const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// All 15 intensity, shape and texture features of one lesion.
FeatureVector extract_all(const LesionImage& image, const GlcmParams& glcm = {});

}  // namespace firank::imaging
