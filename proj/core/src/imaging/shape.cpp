#include <firank/imaging/shape.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace firank::imaging {

MomentEllipse fit_moment_ellipse(const Mask& mask) {
    validate_mask(mask);
    // Coordinates relative to the bounding box so a translated mask gives
    // bit-identical moments.
    Eigen::Index r0 = mask.rows(), c0 = mask.cols();
    for (Eigen::Index r = 0; r < mask.rows(); ++r) {
        for (Eigen::Index c = 0; c < mask.cols(); ++c) {
            if (!mask(r, c)) continue;
            r0 = std::min(r0, r);
            c0 = std::min(c0, c);
        }
    }
    double n = 0.0, sr = 0.0, sc = 0.0;
    for (Eigen::Index r = 0; r < mask.rows(); ++r) {
        for (Eigen::Index c = 0; c < mask.cols(); ++c) {
            if (!mask(r, c)) continue;
            n += 1.0;
            sr += static_cast<double>(r - r0);
            sc += static_cast<double>(c - c0);
        }
    }
    const double mr = sr / n;
    const double mc = sc / n;
    double urr = 0.0, ucc = 0.0, urc = 0.0;
    for (Eigen::Index r = 0; r < mask.rows(); ++r) {
        for (Eigen::Index c = 0; c < mask.cols(); ++c) {
            if (!mask(r, c)) continue;
            const double dr = static_cast<double>(r - r0) - mr;
            const double dc = static_cast<double>(c - c0) - mc;
            urr += dr * dr;
            ucc += dc * dc;
            urc += dr * dc;
        }
    }
    urr = urr / n + 1.0 / 12.0;
    ucc = ucc / n + 1.0 / 12.0;
    urc /= n;

    const double half_trace = 0.5 * (urr + ucc);
    const double disc = std::sqrt(0.25 * (ucc - urr) * (ucc - urr) + urc * urc);
    const double l1 = half_trace + disc;
    const double l2 = std::max(half_trace - disc, 0.0);

    MomentEllipse e;
    e.major = 4.0 * std::sqrt(l1);
    e.minor = 4.0 * std::sqrt(l2);
    e.centroid_row = mr + static_cast<double>(r0);
    e.centroid_col = mc + static_cast<double>(c0);
    e.orientation_rad = 0.5 * std::atan2(2.0 * urc, ucc - urr);
    return e;
}

namespace {

// Clockwise on screen (rows grow downwards): W, NW, N, NE, E, SE, S, SW.
constexpr std::array<std::array<int, 2>, 8> kRing = {{
    {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1},
}};

int direction_between(Eigen::Index fr, Eigen::Index fc, Eigen::Index tr, Eigen::Index tc) {
    const auto dr = static_cast<int>(tr - fr);
    const auto dc = static_cast<int>(tc - fc);
    for (int k = 0; k < 8; ++k)
        if (kRing[static_cast<std::size_t>(k)][0] == dr && kRing[static_cast<std::size_t>(k)][1] == dc) return k;
    return -1;
}

}  // namespace

double contour_perimeter(const Mask& mask) {
    validate_mask(mask);
    auto inside = [&](Eigen::Index r, Eigen::Index c) {
        return r >= 0 && c >= 0 && r < mask.rows() && c < mask.cols() && mask(r, c) == 1;
    };

    Eigen::Index sr = -1, sc = -1;
    for (Eigen::Index r = 0; r < mask.rows() && sr < 0; ++r)
        for (Eigen::Index c = 0; c < mask.cols(); ++c)
            if (mask(r, c)) {
                sr = r;
                sc = c;
                break;
            }

    // Returns the next boundary pixel and the (background) pixel checked just before it.
    struct Step {
        Eigen::Index r, c, br, bc;
    };
    auto advance = [&](Eigen::Index r, Eigen::Index c, Eigen::Index br, Eigen::Index bc) {
        const int from = direction_between(r, c, br, bc);
        Eigen::Index pr = br, pc = bc;
        for (int i = 1; i <= 8; ++i) {
            const auto& d = kRing[static_cast<std::size_t>((from + i) % 8)];
            const Eigen::Index nr = r + d[0], nc = c + d[1];
            if (inside(nr, nc)) return Step{nr, nc, pr, pc};
            pr = nr;
            pc = nc;
        }
        return Step{r, c, br, bc};
    };

    const Step first = advance(sr, sc, sr, sc - 1);
    double length = 0.0;
    Step cur{sr, sc, sr, sc - 1};
    Step next = first;
    const std::size_t guard = 8 * static_cast<std::size_t>(mask.size()) + 8;
    for (std::size_t steps = 0; steps < guard; ++steps) {
        const bool diagonal = next.r != cur.r && next.c != cur.c;
        length += diagonal ? std::numbers::sqrt2 : 1.0;
        cur = next;
        next = advance(cur.r, cur.c, cur.br, cur.bc);
        if (cur.r == sr && cur.c == sc && next.r == first.r && next.c == first.c) return length;
    }
    fail(ErrorCode::InvalidMask, "contour tracing did not close");
}

ShapeFeatures shape_features(const Mask& mask, std::optional<double> pixel_spacing_mm) {
    const auto ellipse = fit_moment_ellipse(mask);
    ShapeFeatures s;
    s.area = static_cast<double>(foreground_count(mask));
    s.perimeter = contour_perimeter(mask);
    if (pixel_spacing_mm) {
        s.area *= *pixel_spacing_mm * *pixel_spacing_mm;
        s.perimeter *= *pixel_spacing_mm;
    }
    s.circularity = 4.0 * std::numbers::pi * s.area / (s.perimeter * s.perimeter);
    s.elongation = ellipse.minor / ellipse.major;
    s.form = s.perimeter * s.elongation / (8.0 * s.area);
    return s;
}

}  // namespace firank::imaging
