#pragma once

#include <firank/core/dataset.hpp>

#include <span>

namespace firank::svm {

/// Area under the ROC curve in Mann-Whitney form: the fraction of
/// (positive, negative) pairs where the positive scores higher, ties
/// counting one half. Throws InsufficientClass unless both classes occur.
double auc(std::span<const double> scores, std::span<const Label> labels);

}  // namespace firank::svm
