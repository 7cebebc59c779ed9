#pragma once

#include <firank/core/dataset.hpp>

namespace firank::svm {

inline constexpr double kStdFloor = 1e-12;

/// Per-feature z-score fitted on training rows only.
struct Normalizer {
    Vector mean;
    /// Population standard deviation, floored at kStdFloor.
    Vector std_dev;
};

/// Requires at least 2 rows (InsufficientSamples).
Normalizer fit_normalizer(const Matrix& x_train);

/// (x - mean) / std per column; columns whose std hit the floor map to 0.
Matrix apply_normalizer(const Normalizer& norm, const Matrix& x);

}  // namespace firank::svm
