#include <firank/imaging/lesion_image.hpp>
#include <firank/error.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace firank::imaging {

std::size_t foreground_count(const Mask& mask) {
    std::size_t count = 0;
    for (Eigen::Index c = 0; c < mask.cols(); ++c)
        for (Eigen::Index r = 0; r < mask.rows(); ++r) count += mask(r, c) != 0;
    return count;
}

void validate_mask(const Mask& mask) {
    Eigen::Index start_r = -1;
    Eigen::Index start_c = -1;
    for (Eigen::Index r = 0; r < mask.rows(); ++r) {
        for (Eigen::Index c = 0; c < mask.cols(); ++c) {
            const auto v = mask(r, c);
            if (v > 1) fail(ErrorCode::InvalidMask, "mask values must be 0 or 1");
            if (v == 1 && start_r < 0) {
                start_r = r;
                start_c = c;
            }
        }
    }
    const auto total = foreground_count(mask);
    if (total < kMinMaskPixels) {
        fail(ErrorCode::InvalidMask, "mask has " + std::to_string(total) + " foreground pixels, need at least " +
                                         std::to_string(kMinMaskPixels));
    }

    // 8-connected flood fill from the first foreground pixel.
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> seen =
        Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(mask.rows(), mask.cols());
    std::vector<std::array<Eigen::Index, 2>> stack{{start_r, start_c}};
    seen(start_r, start_c) = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        ++reached;
        for (Eigen::Index dr = -1; dr <= 1; ++dr) {
            for (Eigen::Index dc = -1; dc <= 1; ++dc) {
                const auto nr = r + dr;
                const auto nc = c + dc;
                if (nr < 0 || nc < 0 || nr >= mask.rows() || nc >= mask.cols()) continue;
                if (mask(nr, nc) == 1 && !seen(nr, nc)) {
                    seen(nr, nc) = 1;
                    stack.push_back({nr, nc});
                }
            }
        }
    }
    if (reached != total) fail(ErrorCode::InvalidMask, "mask is not a single 8-connected component");
}

LesionImage::LesionImage(Matrix pixels, Mask mask, std::optional<double> pixel_spacing_mm)
    : pixels_(std::move(pixels)), mask_(std::move(mask)), spacing_(pixel_spacing_mm) {
    if (pixels_.rows() != mask_.rows() || pixels_.cols() != mask_.cols()) {
        fail(ErrorCode::ShapeError, "image and mask dimensions differ");
    }
    if (spacing_ && !(*spacing_ > 0.0)) fail(ErrorCode::InvalidArgument, "pixel spacing must be positive");
    validate_mask(mask_);
    for (Eigen::Index r = 0; r < pixels_.rows(); ++r)
        for (Eigen::Index c = 0; c < pixels_.cols(); ++c)
            if (mask_(r, c) && !std::isfinite(pixels_(r, c)))
                fail(ErrorCode::InvalidValue, "non-finite intensity inside the mask");
}

std::vector<double> LesionImage::masked_pixels() const {
    std::vector<double> out;
    for (Eigen::Index r = 0; r < pixels_.rows(); ++r)
        for (Eigen::Index c = 0; c < pixels_.cols(); ++c)
            if (mask_(r, c)) out.push_back(pixels_(r, c));
    return out;
}

}  // namespace firank::imaging
