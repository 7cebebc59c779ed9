#include <firank/rankers/laplacian.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace firank::rankers {

std::vector<double> laplacian_scores(const Dataset& data, std::size_t k, std::optional<double> t, double epsilon) {
    const auto n = data.sample_count();
    const auto d = data.feature_count();
    if (k < 1) fail(ErrorCode::InvalidArgument, "laplacian needs k >= 1");
    if (n <= k) {
        fail(ErrorCode::InsufficientSamples, "laplacian score needs more than k=" + std::to_string(k) + " samples");
    }
    if (t && !(*t > 0.0)) fail(ErrorCode::InvalidArgument, "heat-kernel bandwidth must be positive");

    // z-scored samples, row-major.
    std::vector<double> z(n * d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        const auto col = data.column(j);
        const double mu = col.mean();
        const double var = (col.array() - mu).square().mean();
        if (var <= 0.0) continue;
        const double inv = 1.0 / std::sqrt(var);
        for (std::size_t i = 0; i < n; ++i) z[i * d + j] = (col(static_cast<Eigen::Index>(i)) - mu) * inv;
    }
    auto row = [&](std::size_t i) { return std::span<const double>(z.data() + i * d, d); };

    Matrix dist2(n, n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        dist2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t a = 0; a < d; ++a) {
                const double diff = z[i * d + a] - z[j * d + a];
                s += diff * diff;
            }
            dist2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
            dist2(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s;
            total += s;
        }
    }
    double bandwidth = t.value_or(total / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1)));
    if (!(bandwidth > 0.0)) bandwidth = 1.0;

    Matrix w = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<std::size_t> others(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others[p++] = j;
        const auto di = [&](std::size_t j) { return dist2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); };
        std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k), others.end(),
                          [&](std::size_t a, std::size_t b) {
                              if (di(a) != di(b)) return di(a) < di(b);
                              const auto ra = row(a), rb = row(b);
                              if (!std::equal(ra.begin(), ra.end(), rb.begin()))
                                  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
                              return a < b;
                          });
        for (std::size_t q = 0; q < k; ++q) {
            const auto j = others[q];
            const double weight = std::exp(-di(j) / bandwidth);
            w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = weight;
            w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = weight;
        }
    }
    const Vector degree = w.rowwise().sum();
    const double degree_total = degree.sum();

    std::vector<double> scores(d);
    Vector f(static_cast<Eigen::Index>(n));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t i = 0; i < n; ++i) f(static_cast<Eigen::Index>(i)) = z[i * d + a];
        f.array() -= f.dot(degree) / degree_total;
        const double spread = f.dot(degree.cwiseProduct(f));
        if (spread <= epsilon) {
            scores[a] = std::numeric_limits<double>::infinity();
            continue;
        }
        // f' L f = f' D f - f' W f
        const double smooth = spread - f.dot(w * f);
        scores[a] = smooth / (spread + epsilon);
    }
    return scores;
}

}  // namespace firank::rankers
