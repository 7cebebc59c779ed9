#include <firank/evaluation/search.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace firank::evaluation {

bool better_subset(const SubsetScore& a, const SubsetScore& b) {
    if (a.mean_auc != b.mean_auc) return a.mean_auc > b.mean_auc;
    if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
    return a.subset < b.subset;
}

std::vector<SubsetScore> SearchResult::top(std::size_t limit) const {
    std::vector<SubsetScore> sorted = per_subset;
    const auto take = std::min(limit, sorted.size());
    std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(take), sorted.end(), better_subset);
    sorted.resize(take);
    return sorted;
}

SearchResult exhaustive_search(const Dataset& data, const FoldSplit& folds, const SearchOptions& options) {
    const int d = static_cast<int>(data.feature_count());
    if (d > kMaxSearchFeatures) {
        fail(ErrorCode::TooManyFeatures, "exhaustive search is limited to " + std::to_string(kMaxSearchFeatures) +
                                             " features, dataset has " + std::to_string(d));
    }
    auto subsets = enumerate_subsets(d, options.kmax);
    const auto prepared = prepare_folds(data, folds);

    SearchResult result;
    result.evaluated_count = subsets.size();
    result.per_subset.resize(subsets.size());

    std::size_t workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, subsets.size());

    constexpr std::size_t kChunk = 64;
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        while (true) {
            const std::size_t begin = cursor.fetch_add(kChunk);
            if (begin >= subsets.size()) return;
            const std::size_t end = std::min(begin + kChunk, subsets.size());
            for (std::size_t s = begin; s < end; ++s) {
                try {
                    const auto cv = evaluate_subset(prepared, subsets[s], options.svm);
                    result.per_subset[s] = SubsetScore{subsets[s], cv.mean, cv.std_dev, cv.skipped_folds.size()};
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    cursor.store(subsets.size());
                    return;
                }
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    const SubsetScore* best = &result.per_subset.front();
    for (const auto& s : result.per_subset) {
        result.skipped_fold_total += s.skipped_folds;
        if (better_subset(s, *best)) best = &s;
    }
    result.best_subset = best->subset;
    result.best_mean_auc = best->mean_auc;
    result.best_std_auc = best->std_auc;
    return result;
}

}  // namespace firank::evaluation
