#pragma once

#include <firank/core/dataset.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <span>

namespace firank::testing {

struct ReferenceSolution {
    Vector weights;
    double bias = 0.0;
    Vector dual;
    std::size_t iterations = 0;
};

// Accelerated projected gradient (FISTA with restart) on the box-constrained
// dual of the bias-augmented L1-hinge SVM. Slow but independent of the
// coordinate-descent trainer.
inline ReferenceSolution reference_svm(const Matrix& x, std::span<const Label> labels, double C,
                                       double tol = 1e-10, std::size_t max_iter = 2'000'000) {
    const auto n = x.rows();
    Vector y(n);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = labels[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
    Matrix z(n, x.cols() + 1);
    z << x, Vector::Ones(n);
    z = y.asDiagonal() * z;
    const Matrix q = z * z.transpose();
    const double lip = Eigen::SelfAdjointEigenSolver<Matrix>(q, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
    const double step = 1.0 / lip;

    auto project = [&](Vector v) { return v.cwiseMax(0.0).cwiseMin(C).eval(); };
    auto objective = [&](const Vector& a) { return 0.5 * a.dot(q * a) - a.sum(); };

    Vector alpha = Vector::Zero(n), prev = alpha, mom = alpha;
    double t = 1.0;
    ReferenceSolution out;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const Vector grad = q * mom - Vector::Ones(n);
        prev = alpha;
        alpha = project(mom - step * grad);
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        if (objective(alpha) > objective(prev)) {
            t = 1.0;
            mom = alpha;
        } else {
            mom = alpha + ((t - 1.0) / t_next) * (alpha - prev);
            t = t_next;
        }
        out.iterations = it + 1;
        if (it % 64 == 0) {
            const Vector g = q * alpha - Vector::Ones(n);
            double worst = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                double pg = g(i);
                if (alpha(i) <= 0.0) pg = std::min(pg, 0.0);
                else if (alpha(i) >= C) pg = std::max(pg, 0.0);
                worst = std::max(worst, std::abs(pg));
            }
            if (worst < tol) break;
        }
    }
    const Vector wb = z.transpose() * alpha;
    out.weights = wb.head(x.cols());
    out.bias = wb(x.cols());
    out.dual = alpha;
    return out;
}

}  // namespace firank::testing
