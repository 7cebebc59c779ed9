#include <firank/rankers/ranking_io.hpp>
#include <firank/core/csv.hpp>
#include <firank/error.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

namespace firank::rankers {

void write_rankings_csv(std::ostream& out, const std::vector<Ranking>& rankings,
                        const std::vector<std::string>& feature_names, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "method,rank_position,feature_index,feature_name,score\n";
    for (const auto& r : rankings) {
        for (std::size_t pos = 0; pos < r.order.size(); ++pos) {
            const int idx = r.order[pos];
            const auto j = static_cast<std::size_t>(idx - 1);
            out << r.method << ',' << pos + 1 << ',' << idx << ','
                << (j < feature_names.size() ? feature_names[j] : "f" + std::to_string(idx)) << ',';
            if (j < r.scores.size() && !std::isnan(r.scores[j])) out << format_real(r.scores[j]);
            out << '\n';
        }
    }
}

RankingTable read_rankings_csv(std::istream& in) {
    const auto lines = data_lines(in);
    if (lines.empty()) fail(ErrorCode::EmptyInput, "ranking CSV has no header");
    const auto header = split(lines.front(), ',');
    const std::vector<std::string> expected{"method", "rank_position", "feature_index", "feature_name", "score"};
    if (header != expected) {
        fail(ErrorCode::ParseError, "ranking CSV header must be method,rank_position,feature_index,feature_name,score");
    }

    struct Block {
        std::vector<std::pair<int, int>> rows;  // (position, index)
        std::map<int, double> scores;
        std::map<int, std::string> names;
    };
    std::vector<std::string> method_order;
    std::map<std::string, Block> blocks;
    std::string previous;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto cells = split(lines[l], ',');
        if (cells.size() != 5) fail(ErrorCode::ParseError, "ranking CSV line " + std::to_string(l + 1) + ": expected 5 cells");
        const auto& method = cells[0];
        if (method != previous) {
            if (blocks.count(method)) fail(ErrorCode::ParseError, "method '" + method + "' appears in two blocks");
            method_order.push_back(method);
            previous = method;
        }
        auto& b = blocks[method];
        const int pos = parse_int(cells[1]);
        const int idx = parse_int(cells[2]);
        b.rows.emplace_back(pos, idx);
        b.names[idx] = cells[3];
        b.scores[idx] = cells[4].empty() ? std::numeric_limits<double>::quiet_NaN() : parse_real(cells[4]);
    }

    RankingTable table;
    for (const auto& method : method_order) {
        const auto& b = blocks[method];
        const auto d = b.rows.size();
        Ranking r;
        r.method = method;
        r.order.assign(d, 0);
        r.scores.assign(d, std::numeric_limits<double>::quiet_NaN());
        for (const auto& [pos, idx] : b.rows) {
            if (pos < 1 || static_cast<std::size_t>(pos) > d || r.order[static_cast<std::size_t>(pos - 1)] != 0) {
                fail(ErrorCode::ParseError, "method '" + method + "': bad or repeated rank_position " + std::to_string(pos));
            }
            r.order[static_cast<std::size_t>(pos - 1)] = idx;
        }
        if (!is_permutation_of_features(r.order, d)) {
            fail(ErrorCode::ParseError, "method '" + method + "': feature indices are not a permutation of 1.." +
                                            std::to_string(d));
        }
        for (const auto& [idx, s] : b.scores) r.scores[static_cast<std::size_t>(idx - 1)] = s;
        if (table.feature_names.empty()) {
            for (std::size_t j = 1; j <= d; ++j) table.feature_names.push_back(b.names.at(static_cast<int>(j)));
        }
        table.rankings.push_back(std::move(r));
    }
    return table;
}

RankingTable read_rankings_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    return read_rankings_csv(in);
}

}  // namespace firank::rankers
