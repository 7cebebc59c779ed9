#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace firank::rankers {

/// The fourteen ranking methods. Identifiers are the CLI / file names.
enum class Method {
    Cfs,
    Fisher,
    Ecfs,
    Gini,
    Inffs,
    KruskalWallis,
    Laplacian,
    TTest,
    Entropy,
    Bhattacharyya,
    Roc,
    Wilcoxon,
    Relieff,
    Lasso,
};

inline constexpr Method kAllMethods[] = {
    Method::Cfs,     Method::Fisher,  Method::Ecfs,     Method::Gini,          Method::Inffs,
    Method::KruskalWallis, Method::Laplacian, Method::TTest, Method::Entropy, Method::Bhattacharyya,
    Method::Roc,     Method::Wilcoxon, Method::Relieff, Method::Lasso,
};

std::string_view method_id(Method m) noexcept;
/// Name used by the original toolbox for the same method (e.g. fir_mat_ttest).
std::string_view toolbox_name(Method m) noexcept;
/// Accepts identifiers and toolbox names; throws UnknownMethod listing valid names.
Method parse_method(std::string_view name);
/// Comma separated list or "all".
std::vector<Method> parse_method_list(std::string_view list);
std::string valid_method_names();

/// Multipliers of lambda_max, strictly decreasing and positive.
struct LassoGrid {
    std::vector<double> multipliers;

    /// `count` values log-spaced from 1 down to `min_ratio`.
    static LassoGrid log_spaced(std::size_t count = 100, double min_ratio = 1e-4);
};

struct MethodParams {
    std::size_t relieff_k = 10;
    std::size_t lap_k = 5;
    /// Heat-kernel bandwidth; mean squared pairwise distance when absent.
    std::optional<double> lap_t;
    std::size_t gini_bins = 10;
    LassoGrid lasso_grid = LassoGrid::log_spaced();
    double graph_alpha = 0.5;
    double epsilon = 1e-12;
};

/// InvalidArgument / InvalidGrid when a parameter breaks its invariant.
void validate(const MethodParams& params);

}  // namespace firank::rankers
