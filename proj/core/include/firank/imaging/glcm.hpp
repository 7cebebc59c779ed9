#pragma once

#include <firank/imaging/lesion_image.hpp>

namespace firank::imaging {

struct GlcmParams {
    int levels = 32;
    int distance = 1;
    /// One of 0, 45, 90, 135.
    int angle_deg = 0;
};

/// Normalized grey-level co-occurrence matrix. table(i-1, j-1) = P(i, j) for
/// levels i, j in 1..L; rows index the reference pixel, columns its neighbour.
struct Glcm {
    Matrix table;
    GlcmParams params;

    int levels() const noexcept { return params.levels; }
    Vector row_marginal() const { return table.rowwise().sum(); }
    Vector col_marginal() const { return table.colwise().sum().transpose(); }
};

/// Quantizes masked intensities linearly over their own [min, max] into
/// levels 1..L (a constant region maps to level 1).
Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> quantize(const LesionImage& image, int levels);

/// Counts ordered pairs (reference, neighbour) at the given offset where both
/// pixels are in the mask, normalized by the pair count. No symmetrization.
/// Throws EmptyGlcm when no pair exists, InvalidArgument for bad parameters.
Glcm build_glcm(const LesionImage& image, const GlcmParams& params = {});

struct TextureFeatures {
    double contrast = 0.0;
    double correlation = 0.0;  // 0 when either marginal std is zero
    double entropy = 0.0;      // base 2
};

TextureFeatures texture_features(const Glcm& glcm);

}  // namespace firank::imaging
