#include <firank/evaluation/search_io.hpp>
#include <firank/core/csv.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace firank::evaluation {

std::string format_subset(const FeatureSubset& subset, char sep) {
    std::string out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(subset[i]);
    }
    return out;
}

FeatureSubset parse_subset(const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    FeatureSubset out;
    for (const auto& tok : split(normalized, ' ')) {
        if (tok.empty()) continue;
        out.push_back(parse_int(tok));
    }
    if (out.empty()) fail(ErrorCode::ParseError, "empty feature subset '" + text + "'");
    return out;
}

void write_search_result(std::ostream& out, const SearchResult& result, const ConfigEcho& config, std::size_t top_n) {
    out << "# exhaustive subset search, linear SVM, cross-validated AUC\n";
    out << "[config]\n";
    for (const auto& [k, v] : config) out << k << '=' << v << '\n';
    out << "\n[result]\n";
    out << "evaluated_count=" << result.evaluated_count << '\n';
    out << "skipped_folds=" << result.skipped_fold_total << '\n';
    out << "best_subset=" << format_subset(result.best_subset) << '\n';
    out << "best_mean_auc=" << format_real(result.best_mean_auc) << '\n';
    out << "best_std_auc=" << format_real(result.best_std_auc) << '\n';
    out << "\n[top_subsets]\n";
    out << "rank,size,subset,mean_auc,std_auc\n";
    const auto top = result.top(top_n);
    for (std::size_t i = 0; i < top.size(); ++i) {
        out << i + 1 << ',' << top[i].subset.size() << ',' << format_subset(top[i].subset) << ','
            << format_real(top[i].mean_auc) << ',' << format_real(top[i].std_auc) << '\n';
    }
}

SearchSummary read_search_result(std::istream& in) {
    SearchSummary s;
    std::string section;
    bool header_seen = false;
    bool have_best = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = std::string(trim(line));
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == '[') {
            section = t;
            continue;
        }
        if (section == "[config]" || section == "[result]") {
            const auto eq = t.find('=');
            if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected key=value, got '" + t + "'");
            const auto key = t.substr(0, eq);
            const auto value = t.substr(eq + 1);
            if (section == "[config]") {
                s.config[key] = value;
            } else if (key == "evaluated_count") {
                s.evaluated_count = static_cast<std::uint64_t>(std::stoull(value));
            } else if (key == "best_subset") {
                s.best_subset = parse_subset(value);
                have_best = true;
            } else if (key == "best_mean_auc") {
                s.best_mean_auc = parse_real(value);
            } else if (key == "best_std_auc") {
                s.best_std_auc = parse_real(value);
            }
        } else if (section == "[top_subsets]") {
            if (!header_seen) {
                header_seen = true;
                continue;
            }
            const auto cells = split(t, ',');
            if (cells.size() != 5) fail(ErrorCode::ParseError, "bad top_subsets row '" + t + "'");
            s.top.push_back(SubsetScore{parse_subset(cells[2]), parse_real(cells[3]), parse_real(cells[4]), 0});
        }
    }
    if (!have_best) fail(ErrorCode::ParseError, "search result has no best_subset");
    return s;
}

SearchSummary read_search_result_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    return read_search_result(in);
}

}  // namespace firank::evaluation
