#include <firank/core/synthetic.hpp>
#include <firank/core/csv.hpp>
#include <firank/error.hpp>

namespace firank {

Dataset make_synthetic_dataset(const SynthSpec& spec) {
    if (spec.features == 0 || spec.samples < 2) {
        fail(ErrorCode::InvalidArgument, "synthetic data needs n >= 2 and d >= 1");
    }
    for (int idx : spec.informative) {
        if (idx < 1 || static_cast<std::size_t>(idx) > spec.features) {
            fail(ErrorCode::InvalidIndex, "informative index " + std::to_string(idx) + " outside 1.." +
                                              std::to_string(spec.features));
        }
    }
    if (!(spec.noise >= 0.0)) fail(ErrorCode::InvalidArgument, "noise must be non-negative");

    Rng rng(spec.seed);
    const auto n = static_cast<Eigen::Index>(spec.samples);
    const auto d = static_cast<Eigen::Index>(spec.features);
    Matrix x(n, d);
    std::vector<Label> y(spec.samples);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) x(i, j) = rng.normal();
        double score = 0.0;
        for (int idx : spec.informative) score += x(i, idx - 1);
        score += spec.noise * rng.normal();
        y[static_cast<std::size_t>(i)] = score > 0.0 ? 1 : 0;
    }
    return validate_dataset(std::move(x), std::move(y));
}

std::vector<std::string> describe(const SynthSpec& spec) {
    std::string inf;
    for (std::size_t i = 0; i < spec.informative.size(); ++i) {
        if (i) inf += ' ';
        inf += std::to_string(spec.informative[i]);
    }
    return {
        "generator=synthetic-linear-threshold",
        "n=" + std::to_string(spec.samples),
        "d=" + std::to_string(spec.features),
        "informative=" + inf,
        "noise=" + format_real(spec.noise),
        "seed=" + std::to_string(spec.seed.value),
    };
}

}  // namespace firank
