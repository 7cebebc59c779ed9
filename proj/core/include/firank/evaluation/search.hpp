#pragma once

#include <firank/core/dataset.hpp>
#include <firank/evaluation/cv.hpp>
#include <firank/evaluation/folds.hpp>
#include <firank/evaluation/subsets.hpp>
#include <firank/svm/linear_svm.hpp>

#include <vector>

namespace firank::evaluation {

inline constexpr int kMaxSearchFeatures = 25;

struct SubsetScore {
    FeatureSubset subset;
    double mean_auc = 0.0;
    double std_auc = 0.0;
    std::size_t skipped_folds = 0;
};

struct SearchResult {
    FeatureSubset best_subset;
    double best_mean_auc = 0.0;
    double best_std_auc = 0.0;
    std::uint64_t evaluated_count = 0;
    /// In enumeration order (size, then lexicographic).
    std::vector<SubsetScore> per_subset;
    std::size_t skipped_fold_total = 0;

    /// The `limit` best subsets: mean AUC desc, size asc, lexicographic.
    std::vector<SubsetScore> top(std::size_t limit) const;
};

struct SearchOptions {
    int kmax = 8;
    svm::SvmOptions svm{};
    /// Worker threads; 0 = hardware concurrency. Never changes the result.
    std::size_t threads = 0;
};

/// True when `a` beats `b`: higher mean AUC, then fewer features, then lexicographic.
bool better_subset(const SubsetScore& a, const SubsetScore& b);

/**
 * Cross-validated linear-SVM AUC of every subset of size 1..kmax on fixed
 * folds. Subsets are independent tasks; results are stored by enumeration
 * position, then reduced, so the outcome does not depend on scheduling.
 * Throws TooManyFeatures when d > 25 and InvalidBound for a bad kmax.
 */
SearchResult exhaustive_search(const Dataset& data, const FoldSplit& folds, const SearchOptions& options = {});

}  // namespace firank::evaluation
