#include <firank/rankers/univariate.hpp>
#include <firank/rankers/stats.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace firank::rankers {

namespace {

void require_both(std::span<const double> values, std::span<const Label> labels) {
    if (values.size() != labels.size()) fail(ErrorCode::ShapeError, "values and labels differ in length");
    const auto pos = std::count(labels.begin(), labels.end(), 1);
    if (pos == 0 || static_cast<std::size_t>(pos) == labels.size()) {
        fail(ErrorCode::InsufficientClass, "both classes must be present");
    }
}

}  // namespace

double kruskal_wallis_score(std::span<const double> values, std::span<const Label> labels) {
    require_both(values, labels);
    const auto r = midranks(values);
    std::array<double, 2> rank_sum{0.0, 0.0};
    std::array<double, 2> count{0.0, 0.0};
    for (std::size_t i = 0; i < values.size(); ++i) {
        rank_sum[static_cast<std::size_t>(labels[i])] += r.ranks[i];
        count[static_cast<std::size_t>(labels[i])] += 1.0;
    }
    const auto n = static_cast<double>(values.size());
    const double correction = 1.0 - r.tie_term / (n * n * n - n);
    if (correction <= 0.0) return 0.0;
    double h = 0.0;
    for (std::size_t c = 0; c < 2; ++c) h += rank_sum[c] * rank_sum[c] / count[c];
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
    return std::max(h, 0.0) / correction;
}

double fisher_score(std::span<const double> values, std::span<const Label> labels, double epsilon) {
    require_both(values, labels);
    std::array<std::vector<double>, 2> groups;
    for (std::size_t i = 0; i < values.size(); ++i) groups[static_cast<std::size_t>(labels[i])].push_back(values[i]);
    const double mu = mean(values);
    double between = 0.0, within = 0.0;
    for (const auto& g : groups) {
        const auto nc = static_cast<double>(g.size());
        const double mc = mean(g);
        between += nc * (mc - mu) * (mc - mu);
        within += nc * population_variance(g);
    }
    return between / (within + epsilon);
}

double gini_score(std::span<const double> values, std::span<const Label> labels, std::size_t bins) {
    if (bins < 2) fail(ErrorCode::InvalidArgument, "gini needs at least 2 bins");
    if (values.size() != labels.size()) fail(ErrorCode::ShapeError, "values and labels differ in length");
    const auto n = values.size();

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cuts;
    for (std::size_t b = 1; b < bins; ++b) cuts.push_back(sorted[b * n / bins]);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto impurity = [](double n0, double n1) {
        const double t = n0 + n1;
        if (t <= 0.0) return 0.0;
        const double p0 = n0 / t, p1 = n1 / t;
        return 1.0 - p0 * p0 - p1 * p1;
    };

    std::vector<std::array<double, 2>> counts(cuts.size() + 1, {0.0, 0.0});
    std::array<double, 2> total{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const auto bin = static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), values[i]) - cuts.begin());
        counts[bin][static_cast<std::size_t>(labels[i])] += 1.0;
        total[static_cast<std::size_t>(labels[i])] += 1.0;
    }
    double child = 0.0;
    for (const auto& c : counts) child += (c[0] + c[1]) / static_cast<double>(n) * impurity(c[0], c[1]);
    return impurity(total[0], total[1]) - child;
}

}  // namespace firank::rankers
