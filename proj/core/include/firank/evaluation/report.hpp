#pragma once

#include <firank/core/ranking.hpp>
#include <firank/evaluation/subsets.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace firank::evaluation {

struct ReportRow {
    std::string method;
    std::vector<int> order;
    EffResult eff;
};

struct Report {
    FeatureSubset optimal;
    std::vector<ReportRow> rows;
};

/// One row per ranking. ShapeError when rankings disagree on d.
Report build_report(const std::vector<Ranking>& rankings, const FeatureSubset& optimal);

/// `method,eff,m,n_prefix,ranking` with the ranking space separated.
void write_report_csv(std::ostream& out, const Report& report, const std::vector<std::string>& comments = {});
/// Aligned plain-text table: method, ranked indices, eff.
void write_report_text(std::ostream& out, const Report& report);

}  // namespace firank::evaluation
