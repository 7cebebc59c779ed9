#pragma once

#include <firank/core/dataset.hpp>

#include <span>

namespace firank::svm {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SvmOptions {
    double C = 1.0;
    /// Stop when the largest projected-gradient violation falls below this.
    double tol = 1e-6;
    std::size_t max_epochs = 20000;
};

/**
 * Linear SVM from the L1-hinge dual with the bias folded in as the weight of
 * a constant unit column. Invariants: 0 <= dual_i <= C, and
 * (weights, bias) = sum_i dual_i y_i (x_i, 1) with y in {-1, +1}.
 */
struct LinearModel {
    Vector weights;
    double bias = 0.0;
    double C = 1.0;
    Vector dual;
    bool converged = false;
    std::size_t epochs = 0;
    /// Largest projected-gradient violation at exit.
    double max_violation = 0.0;
};

/// Dual coordinate descent over samples in fixed index order. Labels are 0/1.
/// Throws InsufficientClass for single-class input and ShapeError on size mismatch.
/// A model that hits max_epochs is returned with converged = false.
LinearModel train(const RowMatrix& x, std::span<const Label> labels, const SvmOptions& options = {});
LinearModel train(const Matrix& x, std::span<const Label> labels, const SvmOptions& options = {});

/// w . x + b for each row; ShapeError when the column count differs.
Vector decision_values(const LinearModel& model, const Matrix& x);
Vector decision_values(const LinearModel& model, const RowMatrix& x);

/// 0.5 (|w|^2 + b^2) + C sum_i max(0, 1 - y_i (w . x_i + b)).
double primal_objective(const Vector& weights, double bias, double C, const Matrix& x,
                        std::span<const Label> labels);

}  // namespace firank::svm
