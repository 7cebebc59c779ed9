#pragma once

#include "fixtures.hpp"

#include <firank/rankers/rank.hpp>
#include <firank/rankers/separability.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace firank::testing {

struct PropertyOutcome {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    bool passed() const { return cases > 0 && failures == 0; }
};

inline bool close(double a, double b, double tol) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline Dataset case_dataset(Rng& rng) {
    const std::size_t n = 24 + rng.below(17);
    const std::size_t d = 2 + rng.below(5);
    return random_dataset(rng, n, d, 0.5 + 2.0 * rng.uniform());
}

inline Dataset map_columns(const Dataset& data, const std::function<double(double, std::size_t)>& f) {
    Matrix x = data.features();
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = f(x(i, j), static_cast<std::size_t>(j));
    return validate_dataset(std::move(x), data.labels(), data.feature_names());
}

inline std::string case_tag(int c) { return "case " + std::to_string(c); }

// Strictly increasing per-feature transforms must not change rank-statistic rankings.
inline PropertyOutcome monotone_invariance(std::uint64_t seed, int cases) {
    using rankers::Method;
    PropertyOutcome out{"monotone-transform invariance (roc, wilcoxon, kruskal_wallis)"};
    Rng rng(RngSeed{seed});
    for (int c = 0; c < cases; ++c) {
        const auto data = case_dataset(rng);
        std::vector<int> kind(data.feature_count());
        for (auto& k : kind) k = static_cast<int>(rng.below(4));
        const auto mapped = map_columns(data, [&](double v, std::size_t j) {
            switch (kind[j]) {
                case 0: return std::exp(v / 4.0);
                case 1: return v * v * v;
                case 2: return std::atan(v / 3.0);
                default: return 7.0 * v - 3.0;
            }
        });
        for (auto m : {Method::Roc, Method::Wilcoxon, Method::KruskalWallis}) {
            const auto a = rankers::rank(data, m);
            const auto b = rankers::rank(mapped, m);
            bool ok = a.order == b.order;
            for (std::size_t j = 0; ok && j < a.scores.size(); ++j) ok = close(a.scores[j], b.scores[j], 1e-12);
            out.record(ok, case_tag(c) + " method " + std::string(rankers::method_id(m)));
        }
    }
    return out;
}

// Positive affine maps must leave parametric statistic values unchanged within 1e-9.
inline PropertyOutcome affine_invariance(std::uint64_t seed, int cases) {
    using rankers::Method;
    PropertyOutcome out{"positive-affine invariance (ttest, fisher, entropy, bhattacharyya)"};
    Rng rng(RngSeed{seed});
    for (int c = 0; c < cases; ++c) {
        const auto data = case_dataset(rng);
        std::vector<double> a(data.feature_count()), b(data.feature_count());
        for (std::size_t j = 0; j < a.size(); ++j) {
            a[j] = std::exp(4.0 * rng.uniform() - 2.0);
            b[j] = 200.0 * rng.uniform() - 100.0;
        }
        const auto mapped = map_columns(data, [&](double v, std::size_t j) { return a[j] * v + b[j]; });
        for (auto m : {Method::TTest, Method::Fisher, Method::Entropy, Method::Bhattacharyya}) {
            const auto s0 = rankers::feature_scores(data, m);
            const auto s1 = rankers::feature_scores(mapped, m);
            bool ok = true;
            for (std::size_t j = 0; j < s0.size(); ++j) ok = ok && std::abs(s0[j] - s1[j]) <= 1e-9;
            out.record(ok, case_tag(c) + " method " + std::string(rankers::method_id(m)));
        }
    }
    return out;
}

// Exchanging class labels leaves every separability value and every ranking unchanged.
inline PropertyOutcome label_swap_symmetry(std::uint64_t seed, int cases) {
    using rankers::Criterion;
    PropertyOutcome out{"label-swap symmetry (5 separability criteria, 14 rankings)"};
    Rng rng(RngSeed{seed});
    for (int c = 0; c < cases; ++c) {
        const auto data = case_dataset(rng);
        const auto swapped = with_swapped_labels(data);
        bool ok = true;
        std::string where;
        for (std::size_t j = 0; j < data.feature_count() && ok; ++j) {
            const auto x0 = values_of(data, j, 0);
            const auto x1 = values_of(data, j, 1);
            for (auto crit : {Criterion::TTest, Criterion::Entropy, Criterion::Bhattacharyya, Criterion::Roc,
                              Criterion::Wilcoxon}) {
                const double s = rankers::separability_score(x0, x1, crit);
                const double t = rankers::separability_score(x1, x0, crit);
                if (!close(s, t, 1e-12)) {
                    ok = false;
                    where = " feature " + std::to_string(j + 1);
                }
            }
        }
        for (auto m : rankers::kAllMethods) {
            if (!ok) break;
            if (rankers::rank(data, m).order != rankers::rank(swapped, m).order) {
                ok = false;
                where = " ranking " + std::string(rankers::method_id(m));
            }
        }
        out.record(ok, case_tag(c) + where);
    }
    return out;
}

// Reordering samples leaves every ranking and score unchanged.
inline PropertyOutcome sample_permutation_invariance(std::uint64_t seed, int cases) {
    PropertyOutcome out{"sample-permutation invariance (14 rankings)"};
    Rng rng(RngSeed{seed});
    for (int c = 0; c < cases; ++c) {
        const auto data = case_dataset(rng);
        std::vector<std::size_t> perm(data.sample_count());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        rng.shuffle(perm);
        const auto shuffled = data.select_rows(perm);
        bool ok = true;
        std::string where;
        for (auto m : rankers::kAllMethods) {
            const auto a = rankers::rank(data, m);
            const auto b = rankers::rank(shuffled, m);
            bool same = a.order == b.order;
            for (std::size_t j = 0; same && j < a.scores.size(); ++j) same = close(a.scores[j], b.scores[j], 1e-9);
            if (!same) {
                ok = false;
                where = " ranking " + std::string(rankers::method_id(m));
                break;
            }
        }
        out.record(ok, case_tag(c) + where);
    }
    return out;
}

}  // namespace firank::testing
