#include <firank/rankers/rank.hpp>
#include <firank/rankers/cfs.hpp>
#include <firank/rankers/graph.hpp>
#include <firank/rankers/laplacian.hpp>
#include <firank/rankers/lasso.hpp>
#include <firank/rankers/relieff.hpp>
#include <firank/rankers/separability.hpp>
#include <firank/rankers/univariate.hpp>
#include <firank/error.hpp>

#include <cmath>

namespace firank::rankers {

namespace {

struct MethodInfo {
    Method method;
    std::string_view id;
    std::string_view toolbox;
};

constexpr MethodInfo kMethods[] = {
    {Method::Cfs, "cfs", "fir_cor"},
    {Method::Fisher, "fisher", "fir_fisher"},
    {Method::Ecfs, "ecfs", "fir_ec"},
    {Method::Gini, "gini", "fir_gini"},
    {Method::Inffs, "inffs", "fir_inf"},
    {Method::KruskalWallis, "kruskal_wallis", "fir_KW"},
    {Method::Laplacian, "laplacian", "fir_lapscore"},
    {Method::TTest, "ttest", "fir_mat_ttest"},
    {Method::Entropy, "entropy", "fir_mat_entropy"},
    {Method::Bhattacharyya, "bhattacharyya", "fir_mat_bhy"},
    {Method::Roc, "roc", "fir_mat_roc"},
    {Method::Wilcoxon, "wilcoxon", "fir_mat_wilcoxon"},
    {Method::Relieff, "relieff", "fir_mat_relief"},
    {Method::Lasso, "lasso", "fir_mat_lasso"},
};

const MethodInfo& info(Method m) {
    for (const auto& i : kMethods)
        if (i.method == m) return i;
    fail(ErrorCode::UnknownMethod, "unregistered method");
}

std::vector<double> column(const Dataset& data, std::size_t j) {
    const auto c = data.column(j);
    return {c.data(), c.data() + c.size()};
}

std::vector<double> separability_scores(const Dataset& data, Criterion criterion, double epsilon) {
    data.require_both_classes(2);
    std::vector<double> scores(data.feature_count());
    std::vector<double> x0, x1;
    for (std::size_t j = 0; j < scores.size(); ++j) {
        x0.clear();
        x1.clear();
        const auto c = data.column(j);
        for (std::size_t i = 0; i < data.sample_count(); ++i)
            (data.labels()[i] == 0 ? x0 : x1).push_back(c(static_cast<Eigen::Index>(i)));
        scores[j] = separability_score(x0, x1, criterion, epsilon);
    }
    return scores;
}

template <class Fn>
std::vector<double> per_feature(const Dataset& data, Fn fn) {
    data.require_both_classes();
    std::vector<double> scores(data.feature_count());
    for (std::size_t j = 0; j < scores.size(); ++j) scores[j] = fn(column(data, j));
    return scores;
}

}  // namespace

std::string_view method_id(Method m) noexcept {
    for (const auto& i : kMethods)
        if (i.method == m) return i.id;
    return "unknown";
}

std::string_view toolbox_name(Method m) noexcept {
    for (const auto& i : kMethods)
        if (i.method == m) return i.toolbox;
    return "unknown";
}

std::string valid_method_names() {
    std::string out;
    for (const auto& i : kMethods) {
        if (!out.empty()) out += ", ";
        out += i.id;
    }
    return out;
}

Method parse_method(std::string_view name) {
    for (const auto& i : kMethods)
        if (i.id == name || i.toolbox == name) return i.method;
    fail(ErrorCode::UnknownMethod, "unknown method '" + std::string(name) + "'; valid: " + valid_method_names());
}

std::vector<Method> parse_method_list(std::string_view list) {
    if (list == "all") return {std::begin(kAllMethods), std::end(kAllMethods)};
    std::vector<Method> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto pos = list.find(',', start);
        const auto tok = list.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        if (!tok.empty()) out.push_back(parse_method(tok));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (out.empty()) fail(ErrorCode::UnknownMethod, "empty method list; valid: " + valid_method_names());
    return out;
}

LassoGrid LassoGrid::log_spaced(std::size_t count, double min_ratio) {
    LassoGrid g;
    if (count == 1) {
        g.multipliers = {1.0};
        return g;
    }
    const double step = std::log(min_ratio) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) g.multipliers.push_back(std::exp(step * static_cast<double>(i)));
    return g;
}

void validate(const MethodParams& p) {
    if (p.relieff_k < 1 || p.lap_k < 1) fail(ErrorCode::InvalidArgument, "neighbour counts must be >= 1");
    if (p.gini_bins < 2) fail(ErrorCode::InvalidArgument, "gini needs at least 2 bins");
    if (!(p.epsilon > 0.0)) fail(ErrorCode::InvalidArgument, "epsilon must be positive");
    if (!(p.graph_alpha >= 0.0 && p.graph_alpha <= 1.0)) fail(ErrorCode::InvalidArgument, "graph alpha must lie in [0, 1]");
    if (p.lap_t && !(*p.lap_t > 0.0)) fail(ErrorCode::InvalidArgument, "heat-kernel bandwidth must be positive");
    const auto& m = p.lasso_grid.multipliers;
    if (m.empty()) fail(ErrorCode::InvalidGrid, "lasso grid is empty");
    for (std::size_t g = 0; g < m.size(); ++g) {
        if (!(m[g] > 0.0)) fail(ErrorCode::InvalidGrid, "lasso grid values must be positive");
        if (g > 0 && !(m[g] < m[g - 1])) fail(ErrorCode::InvalidGrid, "lasso grid must be strictly decreasing");
    }
}

RankDirection direction_of(Method method) noexcept {
    return method == Method::Laplacian ? RankDirection::Ascending : RankDirection::Descending;
}

std::vector<double> feature_scores(const Dataset& data, Method method, const MethodParams& params) {
    validate(params);
    const auto& labels = data.labels();
    switch (method) {
        case Method::TTest: return separability_scores(data, Criterion::TTest, params.epsilon);
        case Method::Entropy: return separability_scores(data, Criterion::Entropy, params.epsilon);
        case Method::Bhattacharyya: return separability_scores(data, Criterion::Bhattacharyya, params.epsilon);
        case Method::Roc: return separability_scores(data, Criterion::Roc, params.epsilon);
        case Method::Wilcoxon: return separability_scores(data, Criterion::Wilcoxon, params.epsilon);
        case Method::Fisher:
            return per_feature(data, [&](const std::vector<double>& x) { return fisher_score(x, labels, params.epsilon); });
        case Method::KruskalWallis:
            return per_feature(data, [&](const std::vector<double>& x) { return kruskal_wallis_score(x, labels); });
        case Method::Gini:
            return per_feature(data, [&](const std::vector<double>& x) { return gini_score(x, labels, params.gini_bins); });
        case Method::Relieff: return relieff_weights(data, params.relieff_k);
        case Method::Laplacian: return laplacian_scores(data, params.lap_k, params.lap_t, params.epsilon);
        case Method::Ecfs: {
            data.require_both_classes();
            const Vector v = ecfs_scores(feature_affinity(data, params.graph_alpha, params.epsilon));
            return {v.data(), v.data() + v.size()};
        }
        case Method::Inffs: {
            data.require_both_classes();
            const Vector v = inffs_energies(feature_affinity(data, params.graph_alpha, params.epsilon));
            return {v.data(), v.data() + v.size()};
        }
        case Method::Cfs:
        case Method::Lasso:
            fail(ErrorCode::InvalidArgument,
                 std::string(method_id(method)) + " is order-based; use rank() for its ranking");
    }
    fail(ErrorCode::UnknownMethod, "unregistered method");
}

Ranking rank(const Dataset& data, Method method, const MethodParams& params) {
    validate(params);
    Ranking out;
    switch (method) {
        case Method::Cfs:
            data.require_both_classes();
            out = cfs_ranking(data);
            break;
        case Method::Lasso:
            data.require_both_classes();
            out = lasso_ranking(data, params.lasso_grid);
            break;
        default:
            out.scores = feature_scores(data, method, params);
            out.order = order_by_score(out.scores, direction_of(method));
            break;
    }
    out.method = std::string(info(method).id);
    return out;
}

}  // namespace firank::rankers
