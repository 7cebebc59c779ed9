#include <firank/evaluation/report.hpp>
#include <firank/evaluation/effectiveness.hpp>
#include <firank/evaluation/search_io.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace firank::evaluation {

Report build_report(const std::vector<Ranking>& rankings, const FeatureSubset& optimal) {
    if (rankings.empty()) fail(ErrorCode::EmptyInput, "no rankings to report");
    const auto d = rankings.front().feature_count();
    Report report;
    report.optimal = optimal;
    for (const auto& r : rankings) {
        if (r.feature_count() != d) {
            fail(ErrorCode::ShapeError, "ranking '" + r.method + "' has " + std::to_string(r.feature_count()) +
                                            " features, expected " + std::to_string(d));
        }
        report.rows.push_back(ReportRow{r.method, r.order, effectiveness(r, optimal)});
    }
    return report;
}

void write_report_csv(std::ostream& out, const Report& report, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "# optimal_subset=" << format_subset(report.optimal) << '\n';
    out << "method,eff,m,n_prefix,ranking\n";
    for (const auto& row : report.rows) {
        out << row.method << ',' << row.eff.fraction() << ',' << row.eff.m << ',' << row.eff.n_prefix << ','
            << format_subset(row.order) << '\n';
    }
}

void write_report_text(std::ostream& out, const Report& report) {
    std::size_t name_width = std::string("FIR method").size();
    for (const auto& row : report.rows) name_width = std::max(name_width, row.method.size());
    const std::size_t d = report.rows.empty() ? 0 : report.rows.front().order.size();
    const int cell = d >= 100 ? 4 : 3;

    out << std::left << std::setw(static_cast<int>(name_width)) << "FIR method" << "  "
        << std::setw(static_cast<int>(d) * cell) << "Index for ranked features" << "  eff\n";
    out << std::string(name_width + 2 + d * static_cast<std::size_t>(cell) + 6, '-') << '\n';
    for (const auto& row : report.rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << row.method << "  ";
        for (int idx : row.order) out << std::right << std::setw(cell) << idx;
        out << "  " << row.eff.fraction() << '\n';
    }
    out << std::left << "optimal subset: {" << format_subset(report.optimal, ',') << "}\n";
}

}  // namespace firank::evaluation
