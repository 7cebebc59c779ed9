#include <firank/evaluation/cv.hpp>
#include <firank/svm/auc.hpp>
#include <firank/svm/normalizer.hpp>
#include <firank/error.hpp>

#include <cmath>

namespace firank::evaluation {

namespace {

bool both_classes(const std::vector<Label>& y) {
    bool has0 = false, has1 = false;
    for (auto v : y) (v == 0 ? has0 : has1) = true;
    return has0 && has1;
}

}  // namespace

std::vector<PreparedFold> prepare_folds(const Dataset& data, const FoldSplit& folds) {
    std::vector<bool> seen(data.sample_count(), false);
    for (const auto& f : folds.folds) {
        for (auto i : f) {
            if (i >= data.sample_count() || seen[i]) fail(ErrorCode::InvalidArgument, "folds do not partition the samples");
            seen[i] = true;
        }
    }
    for (bool s : seen)
        if (!s) fail(ErrorCode::InvalidArgument, "folds do not cover every sample");

    std::vector<PreparedFold> out;
    out.reserve(folds.fold_count());
    for (std::size_t f = 0; f < folds.fold_count(); ++f) {
        const auto train_rows = folds.train_indices(f);
        const auto& test_rows = folds.folds[f];
        PreparedFold pf;
        Matrix train(static_cast<Eigen::Index>(train_rows.size()), data.features().cols());
        Matrix test(static_cast<Eigen::Index>(test_rows.size()), data.features().cols());
        for (std::size_t r = 0; r < train_rows.size(); ++r) {
            train.row(static_cast<Eigen::Index>(r)) = data.features().row(static_cast<Eigen::Index>(train_rows[r]));
            pf.train_labels.push_back(data.labels()[train_rows[r]]);
        }
        for (std::size_t r = 0; r < test_rows.size(); ++r) {
            test.row(static_cast<Eigen::Index>(r)) = data.features().row(static_cast<Eigen::Index>(test_rows[r]));
            pf.test_labels.push_back(data.labels()[test_rows[r]]);
        }
        pf.usable = train_rows.size() >= 2 && both_classes(pf.train_labels) && both_classes(pf.test_labels);
        if (pf.usable) {
            const auto norm = svm::fit_normalizer(train);
            pf.train = svm::apply_normalizer(norm, train);
            pf.test = svm::apply_normalizer(norm, test);
        }
        out.push_back(std::move(pf));
    }
    return out;
}

CvResult evaluate_subset(const std::vector<PreparedFold>& folds, const FeatureSubset& subset,
                         const svm::SvmOptions& options) {
    if (subset.empty()) fail(ErrorCode::InvalidArgument, "empty feature subset");
    CvResult result;
    std::vector<double> aucs;
    svm::RowMatrix train, test;
    for (std::size_t f = 0; f < folds.size(); ++f) {
        const auto& pf = folds[f];
        if (!pf.usable) {
            result.skipped_folds.push_back(f);
            continue;
        }
        const auto cols = static_cast<Eigen::Index>(subset.size());
        train.resize(pf.train.rows(), cols);
        test.resize(pf.test.rows(), cols);
        for (Eigen::Index c = 0; c < cols; ++c) {
            const int idx = subset[static_cast<std::size_t>(c)];
            if (idx < 1 || idx > pf.train.cols()) fail(ErrorCode::InvalidIndex, "feature index " + std::to_string(idx) + " out of range");
            train.col(c) = pf.train.col(idx - 1);
            test.col(c) = pf.test.col(idx - 1);
        }
        const auto model = svm::train(train, pf.train_labels, options);
        const Vector scores = svm::decision_values(model, test);
        aucs.push_back(svm::auc(std::span<const double>(scores.data(), static_cast<std::size_t>(scores.size())),
                                pf.test_labels));
    }
    if (aucs.empty()) fail(ErrorCode::EvaluationFailure, "every fold was skipped (single-class split)");

    result.evaluated_folds = aucs.size();
    double sum = 0.0;
    for (double a : aucs) sum += a;
    result.mean = sum / static_cast<double>(aucs.size());
    if (aucs.size() > 1) {
        double ss = 0.0;
        for (double a : aucs) ss += (a - result.mean) * (a - result.mean);
        result.std_dev = std::sqrt(ss / static_cast<double>(aucs.size() - 1));
    }
    return result;
}

CvResult cv_auc(const Dataset& data, const FeatureSubset& subset, const FoldSplit& folds,
                const svm::SvmOptions& options) {
    return evaluate_subset(prepare_folds(data, folds), subset, options);
}

}  // namespace firank::evaluation
