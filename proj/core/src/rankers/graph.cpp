#include <firank/rankers/graph.hpp>
#include <firank/rankers/stats.hpp>
#include <firank/rankers/univariate.hpp>
#include <firank/error.hpp>

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

namespace firank::rankers {

FeatureAffinity feature_affinity(const Dataset& data, double alpha, double epsilon) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) fail(ErrorCode::InvalidArgument, "graph alpha must lie in [0, 1]");
    const auto d = data.feature_count();
    if (d < 2) fail(ErrorCode::InvalidArgument, "a feature graph needs at least 2 features");

    std::vector<std::vector<double>> cols(d);
    std::vector<double> fisher(d);
    for (std::size_t j = 0; j < d; ++j) {
        const auto c = data.column(j);
        cols[j].assign(c.data(), c.data() + c.size());
        fisher[j] = fisher_score(cols[j], data.labels(), epsilon);
    }
    const auto [lo, hi] = std::minmax_element(fisher.begin(), fisher.end());
    const double range = *hi - *lo;
    std::vector<double> s(d, 1.0);
    if (range > 0.0)
        for (std::size_t j = 0; j < d; ++j) s[j] = (fisher[j] - *lo) / range;

    FeatureAffinity a;
    a.matrix = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const double rho = std::abs(spearman(cols[i], cols[j]));
            const double v = alpha * std::max(s[i], s[j]) + (1.0 - alpha) * (1.0 - rho);
            a.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            a.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    return a;
}

PerronResult perron_vector(const Matrix& a, double tol, std::size_t max_iter) {
    const auto d = a.rows();
    PerronResult out;
    out.vector = Vector::Constant(d, 1.0 / static_cast<double>(d));
    if (a.cwiseAbs().maxCoeff() == 0.0) return out;

    for (std::size_t it = 1; it <= max_iter; ++it) {
        Vector next = a * out.vector + out.vector;
        next /= next.sum();
        const double change = (next - out.vector).cwiseAbs().sum();
        out.vector = std::move(next);
        out.iterations = it;
        if (change < tol) {
            out.eigenvalue = out.vector.dot(a * out.vector) / out.vector.squaredNorm();
            return out;
        }
    }
    fail(ErrorCode::ConvergenceFailure,
         "power iteration did not converge in " + std::to_string(max_iter) + " iterations");
}

Vector ecfs_scores(const FeatureAffinity& affinity) {
    return perron_vector(affinity.matrix).vector;
}

Vector inffs_energies(const FeatureAffinity& affinity) {
    const auto& a = affinity.matrix;
    const auto d = a.rows();
    const double rho = perron_vector(a).eigenvalue;
    if (!(rho > 0.0)) return Vector::Zero(d);
    const double r = 0.9 / rho;
    const Matrix m = Matrix::Identity(d, d) - r * a;
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success) fail(ErrorCode::ConvergenceFailure, "I - rA is not positive definite");
    // S 1 = (I - rA)^-1 1 - 1
    return llt.solve(Vector::Ones(d)) - Vector::Ones(d);
}

namespace {

Ranking descending_ranking(const char* method, const Vector& scores) {
    Ranking out;
    out.method = method;
    out.scores.assign(scores.data(), scores.data() + scores.size());
    out.order = order_by_score(out.scores, RankDirection::Descending);
    return out;
}

}  // namespace

Ranking ecfs_ranking(const Dataset& data, double alpha, double epsilon) {
    return descending_ranking("ecfs", ecfs_scores(feature_affinity(data, alpha, epsilon)));
}

Ranking inffs_ranking(const Dataset& data, double alpha, double epsilon) {
    return descending_ranking("inffs", inffs_energies(feature_affinity(data, alpha, epsilon)));
}

}  // namespace firank::rankers
