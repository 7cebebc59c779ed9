#include <firank/rankers/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace firank::rankers {

MidRanks midranks(std::span<const double> values) {
    const auto n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    MidRanks out;
    out.ranks.assign(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[idx[j]] == values[idx[i]]) ++j;
        // Positions i..j-1 share the average of ranks i+1..j.
        const double avg = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) out.ranks[idx[k]] = avg;
        const auto t = static_cast<double>(j - i);
        out.tie_term += t * t * t - t;
        i = j;
    }
    return out;
}

double mean(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
    const double m = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return s / static_cast<double>(values.size() - 1);
}

double population_variance(std::span<const double> values) {
    const double m = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return s / static_cast<double>(values.size());
}

double pearson(std::span<const double> a, std::span<const double> b) {
    const double ma = mean(a);
    const double mb = mean(b);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) return 0.0;
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double spearman(std::span<const double> a, std::span<const double> b) {
    const auto ra = midranks(a);
    const auto rb = midranks(b);
    return pearson(ra.ranks, rb.ranks);
}

double rank_auc(std::span<const double> negative, std::span<const double> positive) {
    std::vector<double> all(negative.begin(), negative.end());
    all.insert(all.end(), positive.begin(), positive.end());
    const auto r = midranks(all);
    double rank_sum = 0.0;
    for (std::size_t i = negative.size(); i < all.size(); ++i) rank_sum += r.ranks[i];
    const auto np = static_cast<double>(positive.size());
    const auto nn = static_cast<double>(negative.size());
    return (rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

}  // namespace firank::rankers
