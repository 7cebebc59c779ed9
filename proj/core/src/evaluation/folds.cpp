#include <firank/evaluation/folds.hpp>
#include <firank/error.hpp>

#include <algorithm>

namespace firank::evaluation {

std::vector<std::size_t> FoldSplit::train_indices(std::size_t f) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < folds.size(); ++g)
        if (g != f) out.insert(out.end(), folds[g].begin(), folds[g].end());
    std::sort(out.begin(), out.end());
    return out;
}

FoldSplit stratified_folds(std::span<const Label> labels, std::size_t k, RngSeed seed) {
    if (k < 2) fail(ErrorCode::InvalidArgument, "need at least 2 folds");
    std::vector<std::size_t> class0, class1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 0) class0.push_back(i);
        else if (labels[i] == 1) class1.push_back(i);
        else fail(ErrorCode::InvalidLabel, "labels must be 0 or 1");
    }
    if (class0.size() < k || class1.size() < k) {
        fail(ErrorCode::InsufficientClass, "each class needs at least k=" + std::to_string(k) + " samples");
    }

    Rng rng(seed);
    rng.shuffle(class0);
    rng.shuffle(class1);

    FoldSplit split;
    split.seed = seed;
    split.folds.resize(k);
    std::size_t next = 0;
    for (const auto* cls : {&class0, &class1}) {
        for (auto i : *cls) {
            split.folds[next].push_back(i);
            next = (next + 1) % k;
        }
    }
    for (auto& f : split.folds) std::sort(f.begin(), f.end());
    return split;
}

}  // namespace firank::evaluation
