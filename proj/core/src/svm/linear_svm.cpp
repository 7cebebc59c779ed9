#include <firank/svm/linear_svm.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cmath>

namespace firank::svm {

namespace {

void check_inputs(Eigen::Index rows, std::span<const Label> labels) {
    if (static_cast<std::size_t>(rows) != labels.size()) {
        fail(ErrorCode::ShapeError, "sample count and label count differ");
    }
    bool has0 = false, has1 = false;
    for (auto y : labels) {
        if (y == 0) has0 = true;
        else if (y == 1) has1 = true;
        else fail(ErrorCode::InvalidLabel, "labels must be 0 or 1");
    }
    if (!has0 || !has1) fail(ErrorCode::InsufficientClass, "SVM training needs both classes");
}

// Largest |projected gradient| over all duals for the given primal point.
double max_violation(const RowMatrix& x, const std::vector<double>& sign, const Vector& alpha,
                     const Vector& w, double b, double C) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const double g = sign[static_cast<std::size_t>(i)] * (x.row(i).dot(w) + b) - 1.0;
        double pg = g;
        if (alpha(i) <= 0.0) pg = std::min(g, 0.0);
        else if (alpha(i) >= C) pg = std::max(g, 0.0);
        worst = std::max(worst, std::abs(pg));
    }
    return worst;
}

}  // namespace

LinearModel train(const RowMatrix& x, std::span<const Label> labels, const SvmOptions& options) {
    check_inputs(x.rows(), labels);
    if (!(options.C > 0.0)) fail(ErrorCode::InvalidArgument, "C must be positive");
    if (!(options.tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");

    const auto n = x.rows();
    const auto p = x.cols();
    const double C = options.C;
    std::vector<double> sign(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) sign[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;

    std::vector<double> qdiag(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) qdiag[static_cast<std::size_t>(i)] = x.row(i).squaredNorm() + 1.0;

    LinearModel model;
    model.C = C;
    model.dual = Vector::Zero(n);
    Vector w = Vector::Zero(p);
    double b = 0.0;
    Vector& alpha = model.dual;

    auto rebuild = [&] {
        w.setZero();
        b = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (alpha(i) == 0.0) continue;
            const double coef = alpha(i) * sign[static_cast<std::size_t>(i)];
            w += coef * x.row(i).transpose();
            b += coef;
        }
    };

    while (model.epochs < options.max_epochs) {
        ++model.epochs;
        double sweep_violation = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double yi = sign[static_cast<std::size_t>(i)];
            const double g = yi * (x.row(i).dot(w) + b) - 1.0;
            double pg = g;
            if (alpha(i) <= 0.0) pg = std::min(g, 0.0);
            else if (alpha(i) >= C) pg = std::max(g, 0.0);
            sweep_violation = std::max(sweep_violation, std::abs(pg));
            if (pg == 0.0) continue;

            const double old = alpha(i);
            alpha(i) = std::clamp(old - g / qdiag[static_cast<std::size_t>(i)], 0.0, C);
            const double step = (alpha(i) - old) * yi;
            if (step != 0.0) {
                w += step * x.row(i).transpose();
                b += step;
            }
        }
        if (sweep_violation < options.tol) {
            // Drop accumulated rounding before the final check.
            rebuild();
            model.max_violation = max_violation(x, sign, alpha, w, b, C);
            if (model.max_violation < options.tol) {
                model.converged = true;
                break;
            }
        }
    }
    if (!model.converged) {
        rebuild();
        model.max_violation = max_violation(x, sign, alpha, w, b, C);
    }
    model.weights = std::move(w);
    model.bias = b;
    return model;
}

LinearModel train(const Matrix& x, std::span<const Label> labels, const SvmOptions& options) {
    return train(RowMatrix(x), labels, options);
}

Vector decision_values(const LinearModel& model, const RowMatrix& x) {
    if (x.cols() != model.weights.size()) {
        fail(ErrorCode::ShapeError, "model has " + std::to_string(model.weights.size()) + " weights, input has " +
                                        std::to_string(x.cols()) + " columns");
    }
    return (x * model.weights).array() + model.bias;
}

Vector decision_values(const LinearModel& model, const Matrix& x) {
    if (x.cols() != model.weights.size()) {
        fail(ErrorCode::ShapeError, "model has " + std::to_string(model.weights.size()) + " weights, input has " +
                                        std::to_string(x.cols()) + " columns");
    }
    return (x * model.weights).array() + model.bias;
}

double primal_objective(const Vector& weights, double bias, double C, const Matrix& x, std::span<const Label> labels) {
    double loss = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const double y = labels[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
        loss += std::max(0.0, 1.0 - y * (x.row(i).dot(weights) + bias));
    }
    return 0.5 * (weights.squaredNorm() + bias * bias) + C * loss;
}

}  // namespace firank::svm
