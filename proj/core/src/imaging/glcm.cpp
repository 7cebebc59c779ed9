#include <firank/imaging/glcm.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace firank::imaging {

namespace {

std::pair<int, int> offset_for(const GlcmParams& p) {
    switch (p.angle_deg) {
        case 0: return {0, p.distance};
        case 45: return {-p.distance, p.distance};
        case 90: return {-p.distance, 0};
        case 135: return {-p.distance, -p.distance};
        default:
            fail(ErrorCode::InvalidArgument, "GLCM angle must be 0, 45, 90 or 135 degrees, got " +
                                                 std::to_string(p.angle_deg));
    }
}

}  // namespace

Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> quantize(const LesionImage& image, int levels) {
    if (levels < 1) fail(ErrorCode::InvalidArgument, "GLCM needs at least one grey level");
    const auto& px = image.pixels();
    const auto& mask = image.mask();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Eigen::Index r = 0; r < px.rows(); ++r)
        for (Eigen::Index c = 0; c < px.cols(); ++c)
            if (mask(r, c)) {
                lo = std::min(lo, px(r, c));
                hi = std::max(hi, px(r, c));
            }

    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> q =
        Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>::Zero(px.rows(), px.cols());
    const double range = hi - lo;
    for (Eigen::Index r = 0; r < px.rows(); ++r) {
        for (Eigen::Index c = 0; c < px.cols(); ++c) {
            if (!mask(r, c)) continue;
            int level = 1;
            if (range > 0.0) {
                level = static_cast<int>(std::floor((px(r, c) - lo) / range * levels)) + 1;
                level = std::clamp(level, 1, levels);
            }
            q(r, c) = level;
        }
    }
    return q;
}

Glcm build_glcm(const LesionImage& image, const GlcmParams& params) {
    if (params.distance < 1) fail(ErrorCode::InvalidArgument, "GLCM distance must be >= 1");
    const auto [dr, dc] = offset_for(params);
    const auto q = quantize(image, params.levels);
    const auto& mask = image.mask();

    Glcm g;
    g.params = params;
    g.table = Matrix::Zero(params.levels, params.levels);
    double pairs = 0.0;
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
        for (Eigen::Index c = 0; c < q.cols(); ++c) {
            if (!mask(r, c)) continue;
            const Eigen::Index nr = r + dr;
            const Eigen::Index nc = c + dc;
            if (nr < 0 || nc < 0 || nr >= q.rows() || nc >= q.cols() || !mask(nr, nc)) continue;
            g.table(q(r, c) - 1, q(nr, nc) - 1) += 1.0;
            pairs += 1.0;
        }
    }
    if (pairs < 1.0) fail(ErrorCode::EmptyGlcm, "no pixel pair inside the mask at the requested offset");
    g.table /= pairs;
    return g;
}

TextureFeatures texture_features(const Glcm& glcm) {
    const auto& p = glcm.table;
    const Eigen::Index levels = p.rows();
    const Vector px = glcm.row_marginal();
    const Vector py = glcm.col_marginal();

    double mux = 0.0, muy = 0.0;
    for (Eigen::Index i = 0; i < levels; ++i) {
        mux += static_cast<double>(i + 1) * px(i);
        muy += static_cast<double>(i + 1) * py(i);
    }
    double vx = 0.0, vy = 0.0;
    for (Eigen::Index i = 0; i < levels; ++i) {
        vx += (static_cast<double>(i + 1) - mux) * (static_cast<double>(i + 1) - mux) * px(i);
        vy += (static_cast<double>(i + 1) - muy) * (static_cast<double>(i + 1) - muy) * py(i);
    }
    const double sx = std::sqrt(vx);
    const double sy = std::sqrt(vy);

    TextureFeatures t;
    double cross = 0.0;
    for (Eigen::Index i = 0; i < levels; ++i) {
        for (Eigen::Index j = 0; j < levels; ++j) {
            const double v = p(i, j);
            if (v <= 0.0) continue;
            const double diff = static_cast<double>(i - j);
            t.contrast += diff * diff * v;
            cross += static_cast<double>(i + 1) * static_cast<double>(j + 1) * v;
            t.entropy -= v * std::log2(v);
        }
    }
    constexpr double kDegenerate = 1e-12;
    t.correlation = (sx <= kDegenerate || sy <= kDegenerate) ? 0.0 : (cross - mux * muy) / (sx * sy);
    return t;
}

}  // namespace firank::imaging
