#include <firank/rankers/separability.hpp>
#include <firank/rankers/stats.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace firank::rankers {

double symmetric_gaussian_kl(double mean0, double var0, double mean1, double var1) {
    auto kl = [](double mp, double vp, double mq, double vq) {
        return 0.5 * std::log(vq / vp) + (vp + (mp - mq) * (mp - mq)) / (2.0 * vq) - 0.5;
    };
    return kl(mean0, var0, mean1, var1) + kl(mean1, var1, mean0, var0);
}

double bhattacharyya_distance(double mean0, double var0, double mean1, double var1) {
    const double dm = mean0 - mean1;
    return 0.25 * dm * dm / (var0 + var1) + 0.5 * std::log((var0 + var1) / (2.0 * std::sqrt(var0 * var1)));
}

double separability_score(std::span<const double> class0, std::span<const double> class1,
                          Criterion criterion, double epsilon) {
    if (class0.size() < 2 || class1.size() < 2) {
        fail(ErrorCode::InsufficientClass, "separability needs at least 2 samples in each class");
    }
    const auto n0 = static_cast<double>(class0.size());
    const auto n1 = static_cast<double>(class1.size());

    switch (criterion) {
        case Criterion::TTest: {
            const double v0 = std::max(sample_variance(class0), epsilon);
            const double v1 = std::max(sample_variance(class1), epsilon);
            return std::abs(mean(class0) - mean(class1)) / std::sqrt(v0 / n0 + v1 / n1);
        }
        case Criterion::Entropy: {
            const double v0 = std::max(sample_variance(class0), epsilon);
            const double v1 = std::max(sample_variance(class1), epsilon);
            return symmetric_gaussian_kl(mean(class0), v0, mean(class1), v1);
        }
        case Criterion::Bhattacharyya: {
            const double v0 = std::max(sample_variance(class0), epsilon);
            const double v1 = std::max(sample_variance(class1), epsilon);
            return bhattacharyya_distance(mean(class0), v0, mean(class1), v1);
        }
        case Criterion::Roc:
            return std::abs(rank_auc(class0, class1) - 0.5);
        case Criterion::Wilcoxon: {
            std::vector<double> all(class0.begin(), class0.end());
            all.insert(all.end(), class1.begin(), class1.end());
            const auto r = midranks(all);
            double r1 = 0.0;
            for (std::size_t i = class0.size(); i < all.size(); ++i) r1 += r.ranks[i];
            const double u = r1 - n1 * (n1 + 1.0) / 2.0;
            const double n = n0 + n1;
            const double var = n0 * n1 / 12.0 * ((n + 1.0) - r.tie_term / (n * (n - 1.0)));
            if (var <= 0.0) return 0.0;
            return std::abs(u - n0 * n1 / 2.0) / std::sqrt(var);
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown separability criterion");
}

}  // namespace firank::rankers
