#include <firank/rankers/relieff.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace firank::rankers {

std::vector<double> relieff_weights(const Dataset& data, std::size_t k) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "relieff needs k >= 1");
    data.require_both_classes(k + 1);

    const auto n = data.sample_count();
    const auto d = data.feature_count();
    const auto& labels = data.labels();

    // Min-max normalized copy, row-major for neighbour scans.
    std::vector<double> x(n * d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        const auto col = data.column(j);
        const double lo = col.minCoeff();
        const double range = col.maxCoeff() - lo;
        if (range <= 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) x[i * d + j] = (col(static_cast<Eigen::Index>(i)) - lo) / range;
    }
    auto row = [&](std::size_t i) { return std::span<const double>(x.data() + i * d, d); };

    std::array<double, 2> prior{static_cast<double>(data.class_count(0)) / static_cast<double>(n),
                                static_cast<double>(data.class_count(1)) / static_cast<double>(n)};

    std::vector<double> weights(d, 0.0);
    std::vector<double> dist(n);
    std::vector<std::size_t> candidates;
    candidates.reserve(n);

    auto nearest = [&](std::size_t target, Label cls, bool drop_identical) {
        candidates.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == target || labels[j] != cls) continue;
            if (drop_identical && dist[j] == 0.0) continue;
            candidates.push_back(j);
        }
        const auto take = std::min(k, candidates.size());
        std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                          candidates.end(), [&](std::size_t a, std::size_t b) {
                              if (dist[a] != dist[b]) return dist[a] < dist[b];
                              const auto ra = row(a), rb = row(b);
                              if (!std::equal(ra.begin(), ra.end(), rb.begin())) {
                                  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
                              }
                              return a < b;
                          });
        candidates.resize(take);
        return candidates;
    };

    std::vector<double> hit_sum(d), miss_sum(d);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ri = row(i);
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            const auto rj = row(j);
            for (std::size_t a = 0; a < d; ++a) s += std::abs(ri[a] - rj[a]);
            dist[j] = s;
        }
        const Label own = labels[i];

        std::fill(hit_sum.begin(), hit_sum.end(), 0.0);
        const auto hits = nearest(i, own, true);
        for (auto h : hits) {
            const auto rh = row(h);
            for (std::size_t a = 0; a < d; ++a) hit_sum[a] += std::abs(ri[a] - rh[a]);
        }
        const auto hit_count = static_cast<double>(hits.size());

        std::fill(miss_sum.begin(), miss_sum.end(), 0.0);
        const Label other = 1 - own;
        const auto misses = nearest(i, other, false);
        const double miss_factor = prior[static_cast<std::size_t>(other)] /
                                   (1.0 - prior[static_cast<std::size_t>(own)]) /
                                   static_cast<double>(misses.size());
        for (auto m : misses) {
            const auto rm = row(m);
            for (std::size_t a = 0; a < d; ++a) miss_sum[a] += std::abs(ri[a] - rm[a]);
        }

        for (std::size_t a = 0; a < d; ++a) {
            const double hit_term = hit_count > 0.0 ? hit_sum[a] / hit_count : 0.0;
            weights[a] += miss_factor * miss_sum[a] - hit_term;
        }
    }
    for (auto& w : weights) w /= static_cast<double>(n);
    return weights;
}

}  // namespace firank::rankers
