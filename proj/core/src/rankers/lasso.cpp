#include <firank/rankers/lasso.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace firank::rankers {

namespace {

constexpr double kCoordinateTol = 1e-10;
constexpr std::size_t kMaxSweeps = 10000;

double soft_threshold(double v, double lambda) {
    if (v > lambda) return v - lambda;
    if (v < -lambda) return v + lambda;
    return 0.0;
}

void check_grid(const LassoGrid& grid) {
    if (grid.multipliers.empty()) fail(ErrorCode::InvalidGrid, "lasso grid is empty");
    for (std::size_t g = 0; g < grid.multipliers.size(); ++g) {
        if (!(grid.multipliers[g] > 0.0) || !std::isfinite(grid.multipliers[g])) {
            fail(ErrorCode::InvalidGrid, "lasso grid values must be positive and finite");
        }
        if (g > 0 && !(grid.multipliers[g] < grid.multipliers[g - 1])) {
            fail(ErrorCode::InvalidGrid, "lasso grid must be strictly decreasing");
        }
    }
}

}  // namespace

LassoPath lasso_path(const Dataset& data, const LassoGrid& grid) {
    check_grid(grid);
    const auto n = static_cast<Eigen::Index>(data.sample_count());
    const auto d = static_cast<Eigen::Index>(data.feature_count());
    const double nn = static_cast<double>(n);

    Matrix x = data.features();
    for (Eigen::Index j = 0; j < d; ++j) {
        auto col = x.col(j);
        col.array() -= col.mean();
        const double sd = std::sqrt(col.squaredNorm() / nn);
        if (sd > 0.0) {
            col /= sd;
        } else {
            col.setZero();
        }
    }
    Vector y(n);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = data.labels()[static_cast<std::size_t>(i)];
    y.array() -= y.mean();

    // Same expression as the coordinate update so the first grid point is exactly all-zero.
    Vector col_sq(d);
    LassoPath path;
    for (Eigen::Index j = 0; j < d; ++j) {
        col_sq(j) = x.col(j).squaredNorm() / nn;
        path.lambda_max = std::max(path.lambda_max, std::abs(x.col(j).dot(y) / nn));
    }

    Vector beta = Vector::Zero(d);
    Vector resid = y;
    for (double m : grid.multipliers) {
        const double lambda = m * path.lambda_max;
        for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
            double max_change = 0.0;
            for (Eigen::Index j = 0; j < d; ++j) {
                if (col_sq(j) <= 0.0) continue;
                const double old = beta(j);
                const double rho = x.col(j).dot(resid) / nn + col_sq(j) * old;
                const double updated = soft_threshold(rho, lambda) / col_sq(j);
                if (updated != old) {
                    resid -= (updated - old) * x.col(j);
                    beta(j) = updated;
                    max_change = std::max(max_change, std::abs(updated - old));
                }
            }
            if (max_change < kCoordinateTol) break;
        }
        path.lambdas.push_back(lambda);
        path.coefficients.emplace_back(beta.data(), beta.data() + d);
    }
    return path;
}

Ranking lasso_ranking(const Dataset& data, const LassoGrid& grid) {
    const auto path = lasso_path(data, grid);
    const auto d = data.feature_count();
    constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> first_step(d, kNever);
    for (std::size_t g = 0; g < path.coefficients.size(); ++g)
        for (std::size_t j = 0; j < d; ++j)
            if (first_step[j] == kNever && path.coefficients[g][j] != 0.0) first_step[j] = g;

    const auto& last = path.coefficients.back();
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (first_step[a] != first_step[b]) return first_step[a] < first_step[b];
        return std::abs(last[a]) > std::abs(last[b]);
    });

    Ranking out;
    out.method = "lasso";
    out.scores.assign(d, 0.0);
    for (auto j : idx) {
        out.order.push_back(static_cast<int>(j) + 1);
        if (first_step[j] != kNever) out.scores[j] = path.lambdas[first_step[j]];
    }
    return out;
}

}  // namespace firank::rankers
