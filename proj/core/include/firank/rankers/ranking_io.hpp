#pragma once

#include <firank/core/ranking.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace firank::rankers {

/// Rankings read back from a ranking CSV, with the feature names seen there.
struct RankingTable {
    std::vector<Ranking> rankings;
    std::vector<std::string> feature_names;
};

/**
 * Ranking CSV: `method,rank_position,feature_index,feature_name,score`,
 * one block of d rows per method, 1-based positions and indices. An empty
 * score cell reads back as NaN. '#' lines are comments.
 */
void write_rankings_csv(std::ostream& out, const std::vector<Ranking>& rankings,
                        const std::vector<std::string>& feature_names,
                        const std::vector<std::string>& comments = {});
RankingTable read_rankings_csv(std::istream& in);
RankingTable read_rankings_csv_file(const std::string& path);

}  // namespace firank::rankers
