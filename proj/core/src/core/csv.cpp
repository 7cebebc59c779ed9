#include <firank/core/csv.hpp>
#include <firank/error.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace firank {

std::string format_real(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        fail(ErrorCode::ParseError, "not a number: '" + std::string(token) + "'");
    }
    return value;
}

int parse_int(std::string_view token) {
    token = trim(token);
    int value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        fail(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        lines.emplace_back(t);
    }
    return lines;
}

void write_dataset_csv(std::ostream& out, const Dataset& data, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "label";
    for (const auto& name : data.feature_names()) out << ',' << name;
    out << '\n';
    const auto& x = data.features();
    for (std::size_t i = 0; i < data.sample_count(); ++i) {
        out << data.labels()[i];
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out << ',' << format_real(x(static_cast<Eigen::Index>(i), j));
        }
        out << '\n';
    }
}

Dataset read_dataset_csv(std::istream& in) {
    const auto lines = data_lines(in);
    if (lines.empty()) fail(ErrorCode::EmptyInput, "dataset CSV has no header");
    auto header = split(lines.front(), ',');
    if (header.empty() || header.front() != "label") {
        fail(ErrorCode::ParseError, "dataset CSV header must start with 'label'");
    }
    std::vector<std::string> names(header.begin() + 1, header.end());
    std::vector<std::vector<double>> rows;
    std::vector<Label> labels;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto cells = split(lines[r], ',');
        if (cells.size() != header.size()) {
            fail(ErrorCode::ShapeError, "row " + std::to_string(r) + " has " + std::to_string(cells.size()) +
                                            " cells, header has " + std::to_string(header.size()));
        }
        labels.push_back(parse_int(cells.front()));
        std::vector<double> row;
        row.reserve(names.size());
        for (std::size_t c = 1; c < cells.size(); ++c) row.push_back(parse_real(cells[c]));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::EmptyInput, "dataset CSV has no rows");
    return validate_dataset(rows, labels, std::move(names));
}

void write_dataset_csv_file(const std::string& path, const Dataset& data,
                            const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    write_dataset_csv(out, data, comments);
}

Dataset read_dataset_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    return read_dataset_csv(in);
}

}  // namespace firank
