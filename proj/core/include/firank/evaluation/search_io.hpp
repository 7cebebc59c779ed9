#pragma once

#include <firank/evaluation/search.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace firank::evaluation {

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/**
 * Search result file. Sections:
 *   [config]      key=value echo of the run (seed, folds, C, kmax, ...)
 *   [result]      evaluated_count, best subset and its AUC mean / std
 *   [top_subsets] CSV table of the `top_n` best subsets
 */
void write_search_result(std::ostream& out, const SearchResult& result, const ConfigEcho& config,
                         std::size_t top_n = 50);

struct SearchSummary {
    std::map<std::string, std::string> config;
    std::uint64_t evaluated_count = 0;
    FeatureSubset best_subset;
    double best_mean_auc = 0.0;
    double best_std_auc = 0.0;
    std::vector<SubsetScore> top;
};

SearchSummary read_search_result(std::istream& in);
SearchSummary read_search_result_file(const std::string& path);

/// "2 7 13" or "2,7,13" -> {2, 7, 13}.
FeatureSubset parse_subset(const std::string& text);
std::string format_subset(const FeatureSubset& subset, char sep = ' ');

}  // namespace firank::evaluation
