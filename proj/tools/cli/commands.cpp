#include "cli/commands.hpp"

#include <firank/core/csv.hpp>
#include <firank/core/synthetic.hpp>
#include <firank/error.hpp>
#include <firank/evaluation/effectiveness.hpp>
#include <firank/evaluation/folds.hpp>
#include <firank/evaluation/report.hpp>
#include <firank/evaluation/search.hpp>
#include <firank/evaluation/search_io.hpp>
#include <firank/imaging/features.hpp>
#include <firank/imaging/image_io.hpp>
#include <firank/rankers/rank.hpp>
#include <firank/rankers/ranking_io.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

namespace fs = std::filesystem;

namespace firank::cli {

namespace {

std::ofstream open_out(const std::string& path) {
    if (path.empty()) fail(ErrorCode::InvalidArgument, "--out is required");
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    return out;
}

std::map<std::string, fs::path> files_by_stem(const std::string& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) fail(ErrorCode::IoError, "'" + dir + "' is not a directory");
    std::map<std::string, fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto stem = entry.path().stem().string();
        if (out.count(stem)) fail(ErrorCode::InvalidArgument, "two files share the stem '" + stem + "' in " + dir);
        out[stem] = entry.path();
    }
    return out;
}

std::map<std::string, Label> read_label_sidecar(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open labels file '" + path + "'");
    std::map<std::string, Label> labels;
    const auto lines = data_lines(in);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto cells = split(lines[i], ',');
        if (cells.size() != 2) fail(ErrorCode::ParseError, "'" + path + "' line " + std::to_string(i + 1) + ": expected stem,label");
        if (i == 0 && cells[1] == "label") continue;
        const int label = parse_int(cells[1]);
        if (label != 0 && label != 1) fail(ErrorCode::InvalidLabel, "'" + path + "': label for '" + cells[0] + "' is not 0 or 1");
        labels[cells[0]] = label;
    }
    return labels;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

void cmd_extract(const ExtractConfig& config, std::ostream& log) {
    const auto images = files_by_stem(config.image_dir);
    const auto masks = files_by_stem(config.mask_dir);
    const auto labels = read_label_sidecar(config.labels_path);

    std::vector<std::string> skipped;
    std::vector<std::string> stems;
    std::vector<std::vector<double>> rows;
    std::vector<Label> ys;
    for (const auto& [stem, image_path] : images) {
        if (!masks.count(stem)) {
            skipped.push_back(stem + " (no mask)");
            continue;
        }
        const auto label = labels.find(stem);
        if (label == labels.end()) {
            skipped.push_back(stem + " (no label)");
            continue;
        }
        try {
            imaging::LesionImage lesion(imaging::read_image(image_path.string()),
                                        imaging::read_mask(masks.at(stem).string()), config.pixel_spacing_mm);
            const auto f = imaging::extract_all(lesion, config.glcm);
            rows.emplace_back(f.values.begin(), f.values.end());
        } catch (const Error& e) {
            fail(e.code(), "'" + image_path.string() + "': " + e.what());
        }
        ys.push_back(label->second);
        stems.push_back(stem);
    }
    for (const auto& [stem, mask_path] : masks)
        if (!images.count(stem)) skipped.push_back(stem + " (no image)");

    for (const auto& s : skipped) log << "skipped: " << s << '\n';
    if (rows.empty()) fail(ErrorCode::NoInput, "no image/mask/label triple found");

    std::vector<std::string> names(imaging::kFeatureNames.begin(), imaging::kFeatureNames.end());
    const auto data = validate_dataset(rows, ys, names);
    std::vector<std::string> comments = {
        "command=extract",
        "images=" + config.image_dir,
        "masks=" + config.mask_dir,
        "labels=" + config.labels_path,
        "glcm_levels=" + std::to_string(config.glcm.levels),
        "glcm_distance=" + std::to_string(config.glcm.distance),
        "glcm_angle=" + std::to_string(config.glcm.angle_deg),
        "pixel_spacing_mm=" + (config.pixel_spacing_mm ? format_real(*config.pixel_spacing_mm) : std::string("none")),
        "rows=" + join(stems, " "),
    };
    for (const auto& s : skipped) comments.push_back("skipped=" + s);
    auto out = open_out(config.out_path);
    write_dataset_csv(out, data, comments);
    log << "extracted " << rows.size() << " lesions, skipped " << skipped.size() << '\n';
}

void cmd_rank(const RankConfig& config, std::ostream& log) {
    const auto methods = rankers::parse_method_list(config.methods);
    rankers::validate(config.params);
    const auto data = read_dataset_csv_file(config.data_path);

    std::vector<Ranking> rankings;
    for (auto m : methods) rankings.push_back(rankers::rank(data, m, config.params));

    const auto& p = config.params;
    const std::vector<std::string> comments = {
        "command=rank",
        "data=" + config.data_path,
        "methods=" + config.methods,
        "relieff_k=" + std::to_string(p.relieff_k),
        "lap_k=" + std::to_string(p.lap_k),
        "lap_t=" + (p.lap_t ? format_real(*p.lap_t) : std::string("mean-squared-distance")),
        "gini_bins=" + std::to_string(p.gini_bins),
        "lasso_grid=" + std::to_string(p.lasso_grid.multipliers.size()) + " values from " +
            format_real(p.lasso_grid.multipliers.front()) + " to " + format_real(p.lasso_grid.multipliers.back()) +
            " x lambda_max",
        "graph_alpha=" + format_real(p.graph_alpha),
        "epsilon=" + format_real(p.epsilon),
    };
    auto out = open_out(config.out_path);
    rankers::write_rankings_csv(out, rankings, data.feature_names(), comments);
    log << "ranked " << data.feature_count() << " features with " << rankings.size() << " methods\n";
}

void cmd_search(const SearchConfig& config, std::ostream& log) {
    const auto data = read_dataset_csv_file(config.data_path);
    const auto folds = evaluation::stratified_folds(data.labels(), config.folds, config.seed);

    evaluation::SearchOptions options;
    options.kmax = config.kmax;
    options.svm.C = config.C;
    options.svm.tol = config.tol;
    options.svm.max_epochs = config.max_epochs;
    options.threads = config.threads;
    const auto result = evaluation::exhaustive_search(data, folds, options);

    const evaluation::ConfigEcho echo = {
        {"command", "search"},
        {"data", config.data_path},
        {"samples", std::to_string(data.sample_count())},
        {"features", std::to_string(data.feature_count())},
        {"kmax", std::to_string(config.kmax)},
        {"folds", std::to_string(config.folds)},
        {"cv", "stratified"},
        {"seed", std::to_string(config.seed.value)},
        {"C", format_real(config.C)},
        {"tol", format_real(config.tol)},
        {"max_epochs", std::to_string(config.max_epochs)},
        {"normalization", "z-score fitted on training folds"},
    };
    auto out = open_out(config.out_path);
    evaluation::write_search_result(out, result, echo, config.top);
    log << "evaluated " << result.evaluated_count << " subsets; best {"
        << evaluation::format_subset(result.best_subset, ',') << "} AUC " << format_real(result.best_mean_auc)
        << " +/- " << format_real(result.best_std_auc) << '\n';
}

void cmd_eff(const EffConfig& config, std::ostream& log) {
    const auto table = rankers::read_rankings_csv_file(config.rankings_path);
    const auto optimal = evaluation::parse_subset(config.optimal);

    std::ofstream file;
    std::ostream* out = &log;
    if (!config.out_path.empty()) {
        file = open_out(config.out_path);
        out = &file;
    }
    *out << "# command=eff\n# rankings=" << config.rankings_path
         << "\n# optimal_subset=" << evaluation::format_subset(optimal) << '\n';
    *out << "method,m,n_prefix,eff\n";
    for (const auto& r : table.rankings) {
        const auto e = evaluation::effectiveness(r, optimal);
        *out << r.method << ',' << e.m << ',' << e.n_prefix << ',' << e.fraction() << '\n';
    }
}

void cmd_synth(const SynthConfig& config, std::ostream& log) {
    SynthSpec spec;
    spec.samples = config.n;
    spec.features = config.d;
    spec.informative = evaluation::parse_subset(config.informative);
    spec.noise = config.noise;
    spec.seed = config.seed;
    const auto data = make_synthetic_dataset(spec);

    auto comments = describe(spec);
    comments.insert(comments.begin(), "command=synth");
    auto out = open_out(config.out_path);
    write_dataset_csv(out, data, comments);
    log << "wrote " << data.sample_count() << " samples (" << data.class_count(1) << " positive) x "
        << data.feature_count() << " features\n";
}

void cmd_report(const ReportConfig& config, std::ostream& log) {
    const auto table = rankers::read_rankings_csv_file(config.rankings_path);
    evaluation::FeatureSubset optimal;
    std::string source;
    if (!config.optimal.empty()) {
        optimal = evaluation::parse_subset(config.optimal);
        source = "--optimal";
    } else if (!config.search_path.empty()) {
        optimal = evaluation::read_search_result_file(config.search_path).best_subset;
        source = config.search_path;
    } else {
        fail(ErrorCode::InvalidArgument, "report needs --optimal or --search");
    }
    const auto report = evaluation::build_report(table.rankings, optimal);
    evaluation::write_report_text(log, report);
    if (!config.out_path.empty()) {
        auto out = open_out(config.out_path);
        evaluation::write_report_csv(out, report,
                                     {"command=report", "rankings=" + config.rankings_path, "optimal_source=" + source});
    }
}

}  // namespace firank::cli
