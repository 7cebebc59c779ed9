#include <firank/core/dataset.hpp>
#include <firank/core/ranking.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace firank {

std::size_t Dataset::class_count(Label label) const noexcept {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

void Dataset::require_both_classes(std::size_t min_per_class) const {
    const auto n0 = class_count(0);
    const auto n1 = class_count(1);
    if (n0 < min_per_class || n1 < min_per_class) {
        fail(ErrorCode::InsufficientClass,
             "need at least " + std::to_string(min_per_class) + " samples per class, have " +
                 std::to_string(n0) + " / " + std::to_string(n1));
    }
}

Dataset Dataset::select_rows(std::span<const std::size_t> rows) const {
    Matrix m(static_cast<Eigen::Index>(rows.size()), features_.cols());
    std::vector<Label> y;
    y.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] >= sample_count()) fail(ErrorCode::InvalidIndex, "row out of range");
        m.row(static_cast<Eigen::Index>(r)) = features_.row(static_cast<Eigen::Index>(rows[r]));
        y.push_back(labels_[rows[r]]);
    }
    return validate_dataset(std::move(m), std::move(y), names_);
}

Dataset Dataset::select_columns(std::span<const std::size_t> cols) const {
    Matrix m(features_.rows(), static_cast<Eigen::Index>(cols.size()));
    std::vector<std::string> names;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c] >= feature_count()) fail(ErrorCode::InvalidIndex, "column out of range");
        m.col(static_cast<Eigen::Index>(c)) = features_.col(static_cast<Eigen::Index>(cols[c]));
        names.push_back(names_[cols[c]]);
    }
    return validate_dataset(std::move(m), labels_, std::move(names));
}

bool operator==(const Dataset& a, const Dataset& b) {
    return a.labels_ == b.labels_ && a.names_ == b.names_ &&
           a.features_.rows() == b.features_.rows() && a.features_.cols() == b.features_.cols() &&
           a.features_ == b.features_;
}

Dataset validate_dataset(Matrix features, std::vector<Label> labels, std::vector<std::string> names) {
    if (features.rows() == 0 || features.cols() == 0) {
        fail(ErrorCode::EmptyInput, "feature matrix is empty");
    }
    if (static_cast<std::size_t>(features.rows()) != labels.size()) {
        fail(ErrorCode::ShapeError, "label count " + std::to_string(labels.size()) +
                                        " does not match row count " + std::to_string(features.rows()));
    }
    if (features.rows() < 2) {
        fail(ErrorCode::InsufficientSamples, "a dataset needs at least 2 samples");
    }
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            if (!std::isfinite(features(i, j))) {
                fail(ErrorCode::InvalidValue, "non-finite entry at row " + std::to_string(i + 1) +
                                                  ", column " + std::to_string(j + 1));
            }
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            fail(ErrorCode::InvalidLabel, "label " + std::to_string(labels[i]) + " at row " +
                                              std::to_string(i + 1) + " is not 0 or 1");
        }
    }
    const auto d = static_cast<std::size_t>(features.cols());
    if (names.empty()) {
        for (std::size_t j = 0; j < d; ++j) names.push_back("f" + std::to_string(j + 1));
    } else if (names.size() != d) {
        fail(ErrorCode::ShapeError, "feature name count does not match column count");
    }

    Dataset out;
    out.features_ = std::move(features);
    out.labels_ = std::move(labels);
    out.names_ = std::move(names);
    return out;
}

Dataset validate_dataset(const std::vector<std::vector<double>>& rows, const std::vector<Label>& labels,
                         std::vector<std::string> names) {
    if (rows.empty() || rows.front().empty()) fail(ErrorCode::EmptyInput, "feature matrix is empty");
    const auto d = rows.front().size();
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d) {
            fail(ErrorCode::ShapeError, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(d));
        }
        for (std::size_t j = 0; j < d; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return validate_dataset(std::move(m), labels, std::move(names));
}

Dataset with_column(const Dataset& data, std::size_t col, const Vector& values) {
    Matrix m = data.features();
    m.col(static_cast<Eigen::Index>(col)) = values;
    return validate_dataset(std::move(m), data.labels(), data.feature_names());
}

Dataset with_swapped_labels(const Dataset& data) {
    std::vector<Label> y = data.labels();
    for (auto& v : y) v = 1 - v;
    return validate_dataset(data.features(), std::move(y), data.feature_names());
}

// ---- Ranking helpers ----

std::size_t Ranking::position_of(int index) const noexcept {
    const auto it = std::find(order.begin(), order.end(), index);
    return it == order.end() ? 0 : static_cast<std::size_t>(it - order.begin()) + 1;
}

namespace {

// Scores equal to 12 significant digits tie; last-bit noise from summation
// order must not decide the ranking.
double tie_key(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 11);
    double out = v;
    std::from_chars(buf, res.ptr, out);
    return out;
}

}  // namespace

std::vector<int> order_by_score(const std::vector<double>& scores, RankDirection direction) {
    std::vector<int> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> keys(scores.size());
    std::transform(scores.begin(), scores.end(), keys.begin(), tie_key);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const double sa = keys[static_cast<std::size_t>(a)];
        const double sb = keys[static_cast<std::size_t>(b)];
        if (std::isnan(sa) || std::isnan(sb)) return !std::isnan(sa) && std::isnan(sb);
        return direction == RankDirection::Descending ? sa > sb : sa < sb;
    });
    for (auto& i : idx) ++i;
    return idx;
}

bool is_permutation_of_features(const std::vector<int>& order, std::size_t d) {
    if (order.size() != d) return false;
    std::vector<bool> seen(d, false);
    for (int v : order) {
        if (v < 1 || static_cast<std::size_t>(v) > d || seen[static_cast<std::size_t>(v - 1)]) return false;
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
}

std::string EffResult::fraction() const {
    return std::to_string(m) + "/" + std::to_string(n_prefix);
}

}  // namespace firank
