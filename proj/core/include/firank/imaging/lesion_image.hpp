#pragma once

#include <firank/core/dataset.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace firank::imaging {

/// Binary lesion mask, 1 = foreground. Rows are image rows (y), columns image columns (x).
using Mask = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::size_t kMinMaskPixels = 16;

/// Number of foreground pixels.
std::size_t foreground_count(const Mask& mask);

/// Throws InvalidMask unless the mask holds only {0,1}, has at least
/// kMinMaskPixels foreground pixels and forms one 8-connected component.
void validate_mask(const Mask& mask);

/**
 * Grayscale lesion image with an aligned binary mask.
 * Invariants are checked on construction (InvalidMask / ShapeError).
 */
class LesionImage {
public:
    LesionImage(Matrix pixels, Mask mask, std::optional<double> pixel_spacing_mm = std::nullopt);

    const Matrix& pixels() const noexcept { return pixels_; }
    const Mask& mask() const noexcept { return mask_; }
    std::optional<double> pixel_spacing() const noexcept { return spacing_; }

    Eigen::Index rows() const noexcept { return pixels_.rows(); }
    Eigen::Index cols() const noexcept { return pixels_.cols(); }

    /// Intensities of masked pixels in raster (row-major) order.
    std::vector<double> masked_pixels() const;

private:
    Matrix pixels_;
    Mask mask_;
    std::optional<double> spacing_;
};

}  // namespace firank::imaging
