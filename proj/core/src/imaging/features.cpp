#include <firank/imaging/features.hpp>
#include <firank/imaging/intensity.hpp>
#include <firank/imaging/shape.hpp>
#include <firank/error.hpp>

namespace firank::imaging {

double FeatureVector::operator[](std::string_view name) const {
    for (std::size_t k = 0; k < kFeatureCount; ++k)
        if (kFeatureNames[k] == name) return values[k];
    fail(ErrorCode::InvalidArgument, "unknown feature name '" + std::string(name) + "'");
}

FeatureVector extract_all(const LesionImage& image, const GlcmParams& glcm) {
    const auto pixels = image.masked_pixels();
    const auto in = intensity_features(pixels);
    const auto sh = shape_features(image.mask(), image.pixel_spacing());
    const auto tx = texture_features(build_glcm(image, glcm));

    FeatureVector f;
    f.values = {in.mean,        in.median,         in.std_dev,       in.maximum,   in.minimum,
                in.kurtosis,    in.skewness,       sh.area,          sh.perimeter, sh.circularity,
                sh.elongation,  sh.form,           tx.contrast,      tx.correlation, tx.entropy};
    return f;
}

}  // namespace firank::imaging
