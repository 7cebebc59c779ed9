#pragma once

#include <firank/core/dataset.hpp>
#include <firank/evaluation/folds.hpp>
#include <firank/evaluation/subsets.hpp>
#include <firank/svm/linear_svm.hpp>

#include <vector>

namespace firank::evaluation {

struct CvResult {
    double mean = 0.0;
    /// Sample standard deviation across evaluated folds (0 with one fold).
    double std_dev = 0.0;
    std::size_t evaluated_folds = 0;
    /// Folds skipped because their test (or training) rows hold a single class.
    std::vector<std::size_t> skipped_folds;
};

/// Per-fold training/test matrices, z-scored with statistics from the
/// training rows. Normalization is per column, so a subset's columns are
/// exactly what fitting on that subset alone would give.
struct PreparedFold {
    svm::RowMatrix train;
    std::vector<Label> train_labels;
    svm::RowMatrix test;
    std::vector<Label> test_labels;
    bool usable = true;
};

std::vector<PreparedFold> prepare_folds(const Dataset& data, const FoldSplit& folds);

/// CV AUC of a subset on prepared folds. Throws EvaluationFailure when every fold is skipped.
CvResult evaluate_subset(const std::vector<PreparedFold>& folds, const FeatureSubset& subset,
                         const svm::SvmOptions& options);

/// Cross-validated AUC of a linear SVM on the subset's columns (1-based).
CvResult cv_auc(const Dataset& data, const FeatureSubset& subset, const FoldSplit& folds,
                const svm::SvmOptions& options = {});

}  // namespace firank::evaluation
