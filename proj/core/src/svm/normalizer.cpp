#include <firank/svm/normalizer.hpp>
#include <firank/error.hpp>

#include <cmath>

namespace firank::svm {

Normalizer fit_normalizer(const Matrix& x_train) {
    if (x_train.rows() < 2) fail(ErrorCode::InsufficientSamples, "normalizer needs at least 2 rows");
    Normalizer norm;
    norm.mean = x_train.colwise().mean().transpose();
    norm.std_dev.resize(x_train.cols());
    for (Eigen::Index j = 0; j < x_train.cols(); ++j) {
        const double var = (x_train.col(j).array() - norm.mean(j)).square().mean();
        norm.std_dev(j) = std::max(std::sqrt(var), kStdFloor);
    }
    return norm;
}

Matrix apply_normalizer(const Normalizer& norm, const Matrix& x) {
    if (x.cols() != norm.mean.size()) fail(ErrorCode::ShapeError, "normalizer column count mismatch");
    Matrix out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (norm.std_dev(j) <= kStdFloor) {
            out.col(j).setZero();
        } else {
            out.col(j) = (x.col(j).array() - norm.mean(j)) / norm.std_dev(j);
        }
    }
    return out;
}

}  // namespace firank::svm
