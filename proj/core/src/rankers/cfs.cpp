#include <firank/rankers/cfs.hpp>
#include <firank/rankers/stats.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace firank::rankers {

namespace {

std::vector<double> column_values(const Dataset& data, std::size_t j) {
    const auto col = data.column(j);
    return {col.data(), col.data() + col.size()};
}

}  // namespace

std::vector<double> class_correlations(const Dataset& data) {
    const std::vector<double> y(data.labels().begin(), data.labels().end());
    std::vector<double> r(data.feature_count());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::abs(pearson(column_values(data, j), y));
    return r;
}

Matrix feature_correlations(const Dataset& data) {
    const auto d = data.feature_count();
    Matrix r = Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < d; ++a) {
        const auto xa = column_values(data, a);
        for (std::size_t b = a + 1; b < d; ++b) {
            const double v = std::abs(pearson(xa, column_values(data, b)));
            r(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
            r(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = v;
        }
    }
    return r;
}

double cfs_merit(std::span<const std::size_t> subset, std::span<const double> r_cf, const Matrix& r_ff) {
    const auto k = static_cast<double>(subset.size());
    if (subset.empty()) return 0.0;
    double cf = 0.0;
    for (auto j : subset) cf += r_cf[j];
    cf /= k;
    double ff = 0.0;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            ff += r_ff(static_cast<Eigen::Index>(subset[a]), static_cast<Eigen::Index>(subset[b]));
    if (subset.size() > 1) ff /= 0.5 * k * (k - 1.0);
    return k * cf / std::sqrt(k + k * (k - 1.0) * ff);
}

Ranking cfs_ranking(const Dataset& data) {
    const auto d = data.feature_count();
    const auto r_cf = class_correlations(data);
    const Matrix r_ff = feature_correlations(data);

    std::vector<std::size_t> chosen;
    std::vector<bool> used(d, false);
    double current = 0.0;
    constexpr double kMinGain = 1e-12;

    while (chosen.size() < d) {
        double best = -1.0;
        std::size_t best_j = d;
        for (std::size_t j = 0; j < d; ++j) {
            if (used[j]) continue;
            chosen.push_back(j);
            const double m = cfs_merit(chosen, r_cf, r_ff);
            chosen.pop_back();
            if (m > best) {
                best = m;
                best_j = j;
            }
        }
        if (best <= current + kMinGain) break;
        chosen.push_back(best_j);
        used[best_j] = true;
        current = best;
    }

    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < d; ++j)
        if (!used[j]) rest.push_back(j);
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return r_cf[a] > r_cf[b]; });
    chosen.insert(chosen.end(), rest.begin(), rest.end());

    Ranking out;
    out.method = "cfs";
    out.scores.assign(d, 0.0);
    std::vector<std::size_t> prefix;
    for (auto j : chosen) {
        prefix.push_back(j);
        out.order.push_back(static_cast<int>(j) + 1);
        out.scores[j] = cfs_merit(prefix, r_cf, r_ff);
    }
    return out;
}

}  // namespace firank::rankers
