#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace firank {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Binary class label: 0 = benign, 1 = malignant.
using Label = int;

/**
 * Immutable n x d feature matrix with binary labels.
 *
 * Columns are addressed 0-based internally; every external surface
 * (rankings, subsets, reports, files) uses 1-based feature indices.
 * Construct through validate_dataset(); a Dataset always satisfies
 * n >= 2, d >= 1, finite entries and labels in {0,1}.
 */
class Dataset {
public:
    const Matrix& features() const noexcept { return features_; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    const std::vector<std::string>& feature_names() const noexcept { return names_; }

    std::size_t sample_count() const noexcept { return labels_.size(); }
    std::size_t feature_count() const noexcept { return names_.size(); }

    /// Column view for feature `col` (0-based).
    Eigen::Ref<const Vector> column(std::size_t col) const { return features_.col(static_cast<Eigen::Index>(col)); }

    std::size_t class_count(Label label) const noexcept;
    bool has_both_classes() const noexcept { return class_count(0) > 0 && class_count(1) > 0; }

    /// Throws InsufficientClass unless each class has at least `min_per_class` samples.
    void require_both_classes(std::size_t min_per_class = 1) const;

    /// New dataset with the given rows (0-based), in the given order.
    Dataset select_rows(std::span<const std::size_t> rows) const;
    /// New dataset with the given columns (0-based), in the given order.
    Dataset select_columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const Dataset& a, const Dataset& b);

private:
    friend Dataset validate_dataset(Matrix, std::vector<Label>, std::vector<std::string>);
    Dataset() = default;

    Matrix features_;
    std::vector<Label> labels_;
    std::vector<std::string> names_;
};

/// Validates a raw matrix and labels. Empty names default to "f1".."fd".
Dataset validate_dataset(Matrix features, std::vector<Label> labels,
                         std::vector<std::string> names = {});

/// Row-major convenience overload; ragged rows raise ShapeError.
Dataset validate_dataset(const std::vector<std::vector<double>>& rows,
                         const std::vector<Label>& labels,
                         std::vector<std::string> names = {});

/// Replaces one column (0-based) of the feature matrix; labels and names are kept.
Dataset with_column(const Dataset& data, std::size_t col, const Vector& values);

/// Swaps labels 0 <-> 1.
Dataset with_swapped_labels(const Dataset& data);

}  // namespace firank
