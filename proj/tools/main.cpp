#include "cli/commands.hpp"

#include <firank/error.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace firank::cli;

    CLI::App app{"firank: feature importance ranking, subset search and ranking effectiveness"};
    app.require_subcommand(1);

    ExtractConfig extract;
    auto* ex = app.add_subcommand("extract", "Extract 15 intensity/shape/texture features from lesion images");
    ex->add_option("--images", extract.image_dir, "Directory of images (.pgm or text matrix)")->required();
    ex->add_option("--masks", extract.mask_dir, "Directory of masks, paired by file stem")->required();
    ex->add_option("--labels", extract.labels_path, "CSV sidecar with stem,label rows")->required();
    ex->add_option("--out", extract.out_path, "Output dataset CSV")->required();
    ex->add_option("--levels", extract.glcm.levels, "GLCM grey levels")->capture_default_str();
    ex->add_option("--distance", extract.glcm.distance, "GLCM pixel distance")->capture_default_str();
    ex->add_option("--angle", extract.glcm.angle_deg, "GLCM angle: 0, 45, 90 or 135")->capture_default_str();
    double spacing = 0.0;
    ex->add_option("--spacing", spacing, "Pixel spacing in mm; area/perimeter in pixels when omitted");

    RankConfig rank;
    std::size_t lasso_count = 100;
    double lasso_ratio = 1e-4;
    double lap_t = 0.0;
    auto* rk = app.add_subcommand("rank", "Rank features with one or more methods");
    rk->add_option("--data", rank.data_path, "Dataset CSV")->required();
    rk->add_option("--methods", rank.methods, "Comma separated method ids or 'all'")->capture_default_str();
    rk->add_option("--out", rank.out_path, "Output ranking CSV")->required();
    rk->add_option("--relieff-k", rank.params.relieff_k, "ReliefF neighbours")->capture_default_str();
    rk->add_option("--lap-k", rank.params.lap_k, "Laplacian score kNN size")->capture_default_str();
    rk->add_option("--lap-t", lap_t, "Heat-kernel bandwidth (default: mean squared distance)");
    rk->add_option("--gini-bins", rank.params.gini_bins, "Gini discretization bins")->capture_default_str();
    rk->add_option("--lasso-count", lasso_count, "Lasso grid size")->capture_default_str();
    rk->add_option("--lasso-ratio", lasso_ratio, "Smallest lambda as a fraction of lambda_max")->capture_default_str();
    rk->add_option("--alpha", rank.params.graph_alpha, "EC-FS / Inf-FS mixing weight")->capture_default_str();

    SearchConfig search;
    std::uint64_t search_seed = 42;
    auto* se = app.add_subcommand("search", "Exhaustive subset search with cross-validated linear SVM AUC");
    se->add_option("--data", search.data_path, "Dataset CSV")->required();
    se->add_option("--out", search.out_path, "Output search result file")->required();
    se->add_option("--kmax", search.kmax, "Largest subset size")->capture_default_str();
    se->add_option("--folds", search.folds, "Stratified CV folds")->capture_default_str();
    se->add_option("--seed", search_seed, "Fold assignment seed")->capture_default_str();
    se->add_option("--C", search.C, "SVM penalty")->capture_default_str();
    se->add_option("--tol", search.tol, "SVM projected-gradient tolerance")->capture_default_str();
    se->add_option("--max-epochs", search.max_epochs, "SVM epoch limit")->capture_default_str();
    se->add_option("--threads", search.threads, "Worker threads (0 = all cores); results do not depend on it");
    se->add_option("--top", search.top, "Subsets listed in the output")->capture_default_str();

    EffConfig eff;
    auto* ef = app.add_subcommand("eff", "Effectiveness m/n of rankings for a known optimal subset");
    ef->add_option("--rankings", eff.rankings_path, "Ranking CSV")->required();
    ef->add_option("--optimal", eff.optimal, "Optimal subset, e.g. 2,7,13")->required();
    ef->add_option("--out", eff.out_path, "Output CSV (stdout when omitted)");

    SynthConfig synth;
    std::uint64_t synth_seed = 42;
    auto* sy = app.add_subcommand("synth", "Generate a planted synthetic dataset");
    sy->add_option("--n", synth.n, "Samples")->capture_default_str();
    sy->add_option("--d", synth.d, "Features")->capture_default_str();
    sy->add_option("--informative", synth.informative, "1-based informative features")->capture_default_str();
    sy->add_option("--noise", synth.noise, "Label noise standard deviation")->capture_default_str();
    sy->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();
    sy->add_option("--out", synth.out_path, "Output dataset CSV")->required();

    ReportConfig report;
    auto* re = app.add_subcommand("report", "Ranking table with eff per method");
    re->add_option("--rankings", report.rankings_path, "Ranking CSV")->required();
    auto* opt = re->add_option("--optimal", report.optimal, "Optimal subset, e.g. 2,7,13");
    re->add_option("--search", report.search_path, "Search result file providing the optimal subset")->excludes(opt);
    re->add_option("--out", report.out_path, "Output report CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ex) {
            if (ex->count("--spacing")) extract.pixel_spacing_mm = spacing;
            cmd_extract(extract, std::cout);
        } else if (*rk) {
            if (rk->count("--lap-t")) rank.params.lap_t = lap_t;
            rank.params.lasso_grid = firank::rankers::LassoGrid::log_spaced(lasso_count, lasso_ratio);
            cmd_rank(rank, std::cout);
        } else if (*se) {
            search.seed.value = search_seed;
            cmd_search(search, std::cout);
        } else if (*ef) {
            cmd_eff(eff, std::cout);
        } else if (*sy) {
            synth.seed.value = synth_seed;
            cmd_synth(synth, std::cout);
        } else if (*re) {
            cmd_report(report, std::cout);
        }
    } catch (const firank::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
