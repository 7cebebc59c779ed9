#pragma once

#include <firank/core/dataset.hpp>
#include <firank/core/rng.hpp>
#include <firank/imaging/lesion_image.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace firank::testing {

inline imaging::Mask disk_mask(int rows, int cols, double cy, double cx, double r) {
    imaging::Mask m = imaging::Mask::Zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if ((i - cy) * (i - cy) + (j - cx) * (j - cx) <= r * r) m(i, j) = 1;
    return m;
}

inline imaging::Mask rect_mask(int rows, int cols, int top, int left, int height, int width) {
    imaging::Mask m = imaging::Mask::Zero(rows, cols);
    m.block(top, left, height, width).setOnes();
    return m;
}

// Ellipse with semi-axes a (along rotated x) and b, rotated by theta.
inline imaging::Mask ellipse_mask(int rows, int cols, double a, double b, double theta) {
    imaging::Mask m = imaging::Mask::Zero(rows, cols);
    const double cy = (rows - 1) / 2.0, cx = (cols - 1) / 2.0;
    const double c = std::cos(theta), s = std::sin(theta);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double u = (j - cx) * c + (i - cy) * s;
            const double v = -(j - cx) * s + (i - cy) * c;
            if (u * u / (a * a) + v * v / (b * b) <= 1.0) m(i, j) = 1;
        }
    }
    return m;
}

inline Matrix ramp_image(int rows, int cols) {
    Matrix px(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) px(i, j) = 10.0 + 2.0 * i + 3.0 * j;
    return px;
}

inline std::vector<Label> balanced_labels(Rng& rng, std::size_t n) {
    std::vector<Label> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = i < n / 2 ? 0 : 1;
    rng.shuffle(y);
    return y;
}

// Random dataset with class-shifted gaussian features and at least `min_per_class` per class.
inline Dataset random_dataset(Rng& rng, std::size_t n, std::size_t d, double shift = 1.0) {
    const auto y = balanced_labels(rng, n);
    Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < d; ++j) {
        const double delta = shift * rng.uniform() * (j % 2 == 0 ? 1.0 : -1.0);
        const double scale = 0.5 + 2.0 * rng.uniform();
        for (std::size_t i = 0; i < n; ++i)
            x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                scale * rng.normal() + (y[i] == 1 ? delta : 0.0);
    }
    return validate_dataset(std::move(x), y);
}

inline std::vector<double> values_of(const Dataset& data, std::size_t col, Label label) {
    std::vector<double> out;
    for (std::size_t i = 0; i < data.sample_count(); ++i)
        if (data.labels()[i] == label) out.push_back(data.features()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)));
    return out;
}

inline std::vector<double> column_vector(const Dataset& data, std::size_t col) {
    const auto c = data.column(col);
    return {c.data(), c.data() + c.size()};
}

struct PublishedRow {
    const char* method;
    int m;
    int n;
};

// eff column as printed in the published table for optimal subset {2,7,13}.
inline const std::vector<PublishedRow>& published_eff() {
    static const std::vector<PublishedRow> rows = {
        {"fir_asl", 3, 14},         {"fir_cor", 3, 12},          {"fir_dgufs", 3, 9},
        {"fir_ec", 3, 5},           {"fir_fisher", 3, 4},        {"fir_fsv", 3, 8},
        {"fir_gini", 3, 14},        {"fir_glsi", 3, 6},          {"fir_il", 3, 12},
        {"fir_inf", 3, 5},          {"fir_jelsr", 3, 13},        {"fir_KW", 3, 12},
        {"fir_lapscore", 3, 12},    {"fir_lle", 3, 12},          {"fir_lnr", 3, 13},
        {"fir_mat_ttest", 3, 4},    {"fir_mat_entropy", 3, 7},   {"fir_mat_bhy", 3, 7},
        {"fir_mat_roc", 3, 8},      {"fir_mat_wilcoxon", 3, 7},  {"fir_mat_relief", 3, 12},
        {"fir_mat_lasso", 3, 14},   {"fir_mc", 3, 8},            {"fir_nmmls", 3, 8},
        {"fir_nnsa", 3, 14},        {"fir_ol", 3, 14},           {"fir_pwfp", 3, 13},
        {"fir_ru", 3, 10},          {"fir_sgo", 3, 11},          {"fir_soc", 3, 13},
    };
    return rows;
}

}  // namespace firank::testing
