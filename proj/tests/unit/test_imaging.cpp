#include <doctest.h>

#include "support/fixtures.hpp"

#include <firank/error.hpp>
#include <firank/imaging/features.hpp>
#include <firank/imaging/glcm.hpp>
#include <firank/imaging/image_io.hpp>
#include <firank/imaging/intensity.hpp>
#include <firank/imaging/shape.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace firank;
using namespace firank::imaging;
using firank::testing::disk_mask;
using firank::testing::rect_mask;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected firank::Error");
    return ErrorCode::IoError;
}

Matrix row_image(std::initializer_list<double> v) {
    Matrix m(1, static_cast<Eigen::Index>(v.size()));
    Eigen::Index j = 0;
    for (double x : v) m(0, j++) = x;
    return m;
}

// Perimeter oracle for a filled axis-aligned rectangle traced through pixel centres.
double rect_perimeter(int h, int w) { return 2.0 * (h - 1) + 2.0 * (w - 1); }

}  // namespace

TEST_SUITE("imaging") {

TEST_CASE("intensity features of [1,2,3]") {
    const std::vector<double> v{1, 2, 3};
    const auto f = intensity_features(v);
    CHECK(f.mean == doctest::Approx(2));
    CHECK(f.median == doctest::Approx(2));
    CHECK(f.std_dev == doctest::Approx(1));
    CHECK(f.maximum == 3);
    CHECK(f.minimum == 1);
    CHECK(std::abs(f.skewness) < 1e-12);
    CHECK(f.kurtosis == doctest::Approx(1.5));
}

TEST_CASE("intensity features of [0,0,0,4]: hand moments") {
    const std::vector<double> v{0, 0, 0, 4};
    const auto f = intensity_features(v);
    CHECK(f.mean == doctest::Approx(1));
    CHECK(f.median == doctest::Approx(0));
    CHECK(f.skewness == doctest::Approx(6.0 / std::pow(3.0, 1.5)).epsilon(1e-12));
    CHECK(f.kurtosis == doctest::Approx(21.0 / 9.0).epsilon(1e-12));
    CHECK(f.std_dev == doctest::Approx(2.0));
}

TEST_CASE("intensity features: degenerate and short inputs") {
    const std::vector<double> same{5, 5, 5};
    CHECK(code_of([&] { intensity_features(same); }) == ErrorCode::DegenerateDistribution);
    const std::vector<double> one{5};
    CHECK(code_of([&] { intensity_features(one); }) == ErrorCode::InsufficientSamples);
    const std::vector<double> even{4, 1, 3, 2};
    CHECK(intensity_features(even).median == doctest::Approx(2.5));
}

TEST_CASE("mask validation") {
    CHECK(code_of([&] { validate_mask(rect_mask(10, 10, 0, 0, 3, 3)); }) == ErrorCode::InvalidMask);
    Mask two = rect_mask(20, 20, 0, 0, 4, 4);
    two.block(10, 10, 4, 4).setOnes();
    CHECK(code_of([&] { validate_mask(two); }) == ErrorCode::InvalidMask);
    Mask diag = Mask::Zero(20, 20);
    for (int i = 0; i < 20; ++i) diag(i, i) = 1;
    CHECK_NOTHROW(validate_mask(diag));
    Mask bad = rect_mask(10, 10, 0, 0, 5, 5);
    bad(0, 0) = 2;
    CHECK(code_of([&] { validate_mask(bad); }) == ErrorCode::InvalidMask);
    CHECK(code_of([&] { LesionImage(Matrix::Zero(10, 11), rect_mask(10, 10, 0, 0, 5, 5)); }) == ErrorCode::ShapeError);
}

TEST_CASE("moment ellipse of a 40x10 rectangle has axis ratio 4") {
    const auto e = fit_moment_ellipse(rect_mask(60, 60, 25, 10, 10, 40));
    CHECK(std::abs(e.major / e.minor - 4.0) < 0.08);
    // Uniform rectangle: variance side^2/12, so M = 4 sqrt(40^2/12).
    CHECK(e.major == doctest::Approx(4.0 * std::sqrt(1600.0 / 12.0)).epsilon(1e-9));
    CHECK(e.minor == doctest::Approx(4.0 * std::sqrt(100.0 / 12.0)).epsilon(1e-9));
}

TEST_CASE("moment ellipse of a disk and rotation invariance") {
    const auto disk = fit_moment_ellipse(disk_mask(50, 50, 24, 24, 20));
    CHECK(std::abs(disk.major / disk.minor - 1.0) < 0.02);
    const Mask m = firank::testing::ellipse_mask(70, 70, 25, 10, 0.4);
    const Mask rotated = m.transpose().colwise().reverse();
    const auto a = fit_moment_ellipse(m);
    const auto b = fit_moment_ellipse(rotated);
    CHECK(a.major == doctest::Approx(b.major).epsilon(1e-9));
    CHECK(a.minor == doctest::Approx(b.minor).epsilon(1e-9));
}

TEST_CASE("single-row mask has a positive minor axis") {
    const auto e = fit_moment_ellipse(rect_mask(5, 30, 2, 2, 1, 20));
    CHECK(e.minor > 0);
    CHECK(e.minor == doctest::Approx(4.0 * std::sqrt(1.0 / 12.0)));
}

TEST_CASE("perimeter of filled rectangles matches the traced oracle") {
    for (auto [h, w] : {std::pair{5, 5}, {10, 20}, {1, 17}, {50, 50}}) {
        CAPTURE(h);
        CAPTURE(w);
        CHECK(contour_perimeter(rect_mask(h + 4, w + 4, 2, 2, h, w)) == doctest::Approx(rect_perimeter(h, w)));
    }
}

TEST_CASE("perimeter of a diagonal staircase uses sqrt(2) steps") {
    Mask m = Mask::Zero(20, 20);
    for (int i = 0; i < 16; ++i) m(i + 2, i + 2) = 1;
    // Out along the diagonal and back: 2 * 15 diagonal steps.
    CHECK(contour_perimeter(m) == doctest::Approx(30.0 * std::numbers::sqrt2));
}

TEST_CASE("square 50x50: area and circularity") {
    const auto f = shape_features(rect_mask(60, 60, 5, 5, 50, 50));
    CHECK(f.area == 2500);
    CHECK(std::abs(f.circularity - std::numbers::pi / 4.0) < 0.05);
    CHECK(f.elongation == doctest::Approx(1.0));
}

TEST_CASE("disk r=30: circularity and elongation") {
    const auto f = shape_features(disk_mask(70, 70, 34, 34, 30));
    CHECK(f.circularity >= 0.85);
    CHECK(f.circularity <= 1.1);
    CHECK(std::abs(f.elongation - 1.0) < 0.03);
    CHECK(f.form == doctest::Approx(f.perimeter * f.elongation / (8.0 * f.area)));
}

TEST_CASE("perimeter grows linearly with side length") {
    const double p10 = contour_perimeter(rect_mask(50, 50, 2, 2, 10, 10));
    const double p20 = contour_perimeter(rect_mask(50, 50, 2, 2, 20, 20));
    const double p40 = contour_perimeter(rect_mask(50, 50, 2, 2, 40, 40));
    // Equal increments of w give equal increments of perimeter.
    CHECK(std::abs((p40 - p20) / (p20 - p10) - 2.0) < 0.1);
}

TEST_CASE("shape features are translation invariant and scale with spacing") {
    const auto a = shape_features(disk_mask(80, 80, 30, 30, 15));
    const auto b = shape_features(disk_mask(80, 80, 47, 41, 15));
    CHECK(a.area == b.area);
    CHECK(a.perimeter == b.perimeter);
    CHECK(a.circularity == b.circularity);
    CHECK(a.elongation == b.elongation);
    CHECK(a.form == b.form);
    const auto mm = shape_features(disk_mask(80, 80, 30, 30, 15), 0.084);
    CHECK(mm.area == doctest::Approx(a.area * 0.084 * 0.084));
    CHECK(mm.perimeter == doctest::Approx(a.perimeter * 0.084));
    CHECK(mm.circularity == doctest::Approx(a.circularity));
}

TEST_CASE("GLCM of a constant fully masked image is a point mass") {
    const LesionImage img(Matrix::Constant(5, 5, 7.0), Mask::Ones(5, 5));
    const auto g = build_glcm(img);
    CHECK(g.table(0, 0) == doctest::Approx(1.0));
    CHECK(g.table.sum() == doctest::Approx(1.0));
    const auto t = texture_features(g);
    CHECK(t.contrast == 0.0);
    CHECK(t.correlation == 0.0);
    CHECK(t.entropy == 0.0);
}

TEST_CASE("GLCM pair enumeration on [0,255,0,255] with L=2") {
    Matrix px = Matrix::Zero(4, 4);
    px.row(1) = row_image({0, 255, 0, 255});
    // The mask needs 16 pixels; use a 4x4 block whose other rows are constant
    // and compare to pair counting over the full block.
    Mask mask = Mask::Ones(4, 4);
    const LesionImage img(px, mask);
    const auto g = build_glcm(img, {2, 1, 0});
    // Row 1 gives (1,2),(2,1),(1,2); rows 0,2,3 give 3 x (1,1) each.
    CHECK(g.table(0, 1) == doctest::Approx(2.0 / 12.0));
    CHECK(g.table(1, 0) == doctest::Approx(1.0 / 12.0));
    CHECK(g.table(0, 0) == doctest::Approx(9.0 / 12.0));
    CHECK(g.table(1, 1) == 0.0);
}

TEST_CASE("GLCM: both pixels must lie in the mask; offsets per angle") {
    Matrix px(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) px(i, j) = i * 6 + j;
    Mask mask = Mask::Ones(6, 6);
    for (int angle : {0, 45, 90, 135}) {
        const auto g = build_glcm(LesionImage(px, mask), {36, 1, angle});
        CHECK(g.table.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((g.table.array() >= 0).all());
        CHECK(g.row_marginal().sum() == doctest::Approx(1.0));
        CHECK(g.col_marginal().sum() == doctest::Approx(1.0));
    }
    CHECK(code_of([&] { build_glcm(LesionImage(px, mask), {8, 6, 0}); }) == ErrorCode::EmptyGlcm);
}

TEST_CASE("texture features from explicit tables") {
    Glcm g;
    g.params.levels = 2;
    g.table = Matrix::Zero(2, 2);
    g.table(0, 1) = 0.5;
    g.table(1, 0) = 0.5;
    auto t = texture_features(g);
    CHECK(t.contrast == doctest::Approx(1.0));
    CHECK(t.entropy == doctest::Approx(1.0));
    CHECK(t.correlation == doctest::Approx(-1.0));

    g.params.levels = 8;
    g.table = Matrix::Constant(8, 8, 1.0 / 64.0);
    t = texture_features(g);
    CHECK(t.entropy == doctest::Approx(2.0 * std::log2(8.0)));
    CHECK(std::abs(t.correlation) < 1e-12);

    g.table = Matrix::Identity(8, 8) / 8.0;
    CHECK(texture_features(g).correlation == doctest::Approx(1.0));
}

TEST_CASE("extract_all on a ramp disk: all finite, contrast positive, deterministic") {
    const LesionImage img(firank::testing::ramp_image(40, 40), disk_mask(40, 40, 20, 20, 12));
    const auto f = extract_all(img);
    for (double v : f.values) CHECK(std::isfinite(v));
    CHECK(f.at(13) > 0.0);
    CHECK(f["t_contrast"] == f.at(13));
    CHECK(f.at(11) > 0.0);
    CHECK(f.at(11) <= 1.0);
    CHECK(f.at(15) >= 0.0);
    CHECK(f.at(15) <= 2.0 * std::log2(32.0));
    CHECK(f == extract_all(img));
    CHECK(code_of([&] { (void)f["nope"]; }) == ErrorCode::InvalidArgument);
}

TEST_CASE("extract_all: constant disk is rejected") {
    const LesionImage img(Matrix::Constant(30, 30, 3.0), disk_mask(30, 30, 15, 15, 8));
    CHECK(code_of([&] { extract_all(img); }) == ErrorCode::DegenerateDistribution);
}

TEST_CASE("extract_all is translation invariant") {
    Matrix px(60, 60);
    Rng rng(RngSeed{3});
    for (Eigen::Index i = 0; i < px.size(); ++i) px.data()[i] = std::floor(255 * rng.uniform());
    const Mask m = disk_mask(60, 60, 20, 20, 10);
    Matrix shifted = Matrix::Zero(60, 60);
    Mask m2 = Mask::Zero(60, 60);
    shifted.block(13, 9, 40, 40) = px.block(0, 0, 40, 40);
    m2.block(13, 9, 40, 40) = m.block(0, 0, 40, 40);
    CHECK(extract_all(LesionImage(px, m)) == extract_all(LesionImage(shifted, m2)));
}

TEST_CASE("intensity affine equivariance") {
    Matrix px(30, 30);
    Rng rng(RngSeed{9});
    for (Eigen::Index i = 0; i < px.size(); ++i) px.data()[i] = 100 * rng.uniform();
    const Mask m = disk_mask(30, 30, 15, 15, 10);
    const auto a = extract_all(LesionImage(px, m));
    const auto b = extract_all(LesionImage((2.5 * px.array() + 7.0).matrix(), m));
    CHECK(b.at(1) == doctest::Approx(2.5 * a.at(1) + 7.0));
    CHECK(b.at(2) == doctest::Approx(2.5 * a.at(2) + 7.0));
    CHECK(b.at(3) == doctest::Approx(2.5 * a.at(3)));
    CHECK(b.at(4) == doctest::Approx(2.5 * a.at(4) + 7.0));
    CHECK(b.at(5) == doctest::Approx(2.5 * a.at(5) + 7.0));
    CHECK(b.at(6) == doctest::Approx(a.at(6)));
    CHECK(b.at(7) == doctest::Approx(a.at(7)));
    for (std::size_t k = 13; k <= 15; ++k) CHECK(b.at(k) == doctest::Approx(a.at(k)));
}

TEST_CASE("image io: PGM and text matrices") {
    const auto dir = std::filesystem::temp_directory_path() / "firank_imaging_io";
    std::filesystem::create_directories(dir);
    Matrix px(3, 4);
    px << 0, 1, 2, 3, 100, 200, 255, 7, 9, 8, 7, 6;
    write_pgm((dir / "a.pgm").string(), px);
    CHECK(read_image((dir / "a.pgm").string()) == px);

    const Mask m = rect_mask(6, 6, 1, 1, 4, 4);
    write_mask_pgm((dir / "m.pgm").string(), m);
    CHECK(read_mask((dir / "m.pgm").string()) == m);

    std::ofstream((dir / "b.csv").string()) << "1,2,3\n4 5 6\n";
    Matrix expect(2, 3);
    expect << 1, 2, 3, 4, 5, 6;
    CHECK(read_image((dir / "b.csv").string()) == expect);

    std::ofstream((dir / "bad.pgm").string()) << "P2\n2 2\n255\n0 0 0 0\n";
    try {
        read_image((dir / "bad.pgm").string());
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("bad.pgm") != std::string::npos);
    }
    std::filesystem::remove_all(dir);
}

}
