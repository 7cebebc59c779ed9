#pragma once

#include <firank/imaging/lesion_image.hpp>

#include <optional>

namespace firank::imaging {

/// Ellipse with the same normalized second central moments as the region.
struct MomentEllipse {
    double major = 0.0;  // M = 4 sqrt(lambda1)
    double minor = 0.0;  // m = 4 sqrt(lambda2)
    double centroid_row = 0.0;
    double centroid_col = 0.0;
    double orientation_rad = 0.0;  // major axis angle from the column axis
};

/// Region-moment ellipse. Each pixel contributes its centre plus the 1/12
/// variance of a unit square, so single-row/column masks keep minor > 0.
MomentEllipse fit_moment_ellipse(const Mask& mask);

/// Outer boundary length by Moore-neighbour 8-connected tracing: axis steps
/// count 1 and diagonal steps sqrt(2), measured between pixel centres.
double contour_perimeter(const Mask& mask);

struct ShapeFeatures {
    double area = 0.0;
    double perimeter = 0.0;
    double circularity = 0.0;  // 4 pi area / perimeter^2
    double elongation = 0.0;   // minor / major
    double form = 0.0;         // perimeter * elongation / (8 area)
};

/// Area and perimeter are in pixels, or mm^2 / mm when a spacing is given.
ShapeFeatures shape_features(const Mask& mask, std::optional<double> pixel_spacing_mm = std::nullopt);

}  // namespace firank::imaging
