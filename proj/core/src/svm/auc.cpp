#include <firank/svm/auc.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace firank::svm {

double auc(std::span<const double> scores, std::span<const Label> labels) {
    if (scores.size() != labels.size()) fail(ErrorCode::ShapeError, "scores and labels differ in length");
    const auto n = scores.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    double pos = 0.0, neg = 0.0, pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && scores[idx[j]] == scores[idx[i]]) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            if (labels[idx[k]] == 1) {
                pos += 1.0;
                pos_rank_sum += midrank;
            } else {
                neg += 1.0;
            }
        }
        i = j;
    }
    if (pos == 0.0 || neg == 0.0) fail(ErrorCode::InsufficientClass, "AUC needs both classes");
    return (pos_rank_sum - pos * (pos + 1.0) / 2.0) / (pos * neg);
}

}  // namespace firank::svm
