#include <firank/evaluation/subsets.hpp>
#include <firank/error.hpp>

namespace firank::evaluation {

std::uint64_t subset_count(int d, int kmax) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(d, 0)
    for (int k = 1; k <= kmax && k <= d; ++k) {
        binom = binom * static_cast<std::uint64_t>(d - k + 1) / static_cast<std::uint64_t>(k);
        total += binom;
    }
    return total;
}

void for_each_subset(int d, int kmax, const std::function<void(const FeatureSubset&)>& visit) {
    if (d < 1 || kmax < 1 || kmax > d) {
        fail(ErrorCode::InvalidBound, "subset size bound kmax=" + std::to_string(kmax) + " must lie in 1.." +
                                          std::to_string(d));
    }
    FeatureSubset s;
    for (int k = 1; k <= kmax; ++k) {
        s.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            visit(s);
            // Advance to the next k-combination in lexicographic order.
            int i = k - 1;
            while (i >= 0 && s[static_cast<std::size_t>(i)] == d - k + i + 1) --i;
            if (i < 0) break;
            ++s[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<FeatureSubset> enumerate_subsets(int d, int kmax) {
    std::vector<FeatureSubset> out;
    if (d >= 1 && kmax >= 1 && kmax <= d) out.reserve(static_cast<std::size_t>(subset_count(d, kmax)));
    for_each_subset(d, kmax, [&](const FeatureSubset& s) { out.push_back(s); });
    return out;
}

}  // namespace firank::evaluation
