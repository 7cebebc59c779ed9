#pragma once

#include <firank/core/rng.hpp>
#include <firank/imaging/glcm.hpp>
#include <firank/rankers/params.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace firank::cli {

struct ExtractConfig {
    std::string image_dir;
    std::string mask_dir;
    std::string labels_path;
    std::string out_path;
    imaging::GlcmParams glcm{};
    std::optional<double> pixel_spacing_mm;
};

struct RankConfig {
    std::string data_path;
    std::string methods = "all";
    std::string out_path;
    rankers::MethodParams params{};
};

struct SearchConfig {
    std::string data_path;
    std::string out_path;
    int kmax = 8;
    std::size_t folds = 10;
    RngSeed seed{};
    double C = 1.0;
    double tol = 1e-6;
    std::size_t max_epochs = 20000;
    std::size_t threads = 0;
    std::size_t top = 50;
};

struct EffConfig {
    std::string rankings_path;
    std::string optimal;
    std::string out_path;  // stdout when empty
};

struct SynthConfig {
    std::size_t n = 200;
    std::size_t d = 15;
    std::string informative = "2,7,13";
    double noise = 1.0;
    RngSeed seed{};
    std::string out_path;
};

struct ReportConfig {
    std::string rankings_path;
    std::string optimal;      // comma list; or
    std::string search_path;  // best subset of a search result
    std::string out_path;     // CSV; the text table goes to `log`
};

/// Each command writes its outputs and a short summary to `log`. Typed
/// failures escape as firank::Error; the caller maps them to exit codes.
void cmd_extract(const ExtractConfig& config, std::ostream& log);
void cmd_rank(const RankConfig& config, std::ostream& log);
void cmd_search(const SearchConfig& config, std::ostream& log);
void cmd_eff(const EffConfig& config, std::ostream& log);
void cmd_synth(const SynthConfig& config, std::ostream& log);
void cmd_report(const ReportConfig& config, std::ostream& log);

}  // namespace firank::cli
