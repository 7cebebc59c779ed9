#pragma once

#include <firank/core/dataset.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace firank {

/// Round-trip decimal formatting (17 significant digits, shortest trailing form).
std::string format_real(double value);
/// Strict parse of a full token as a double; ParseError otherwise.
double parse_real(std::string_view token);
int parse_int(std::string_view token);

std::vector<std::string> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

/// Lines of a text stream with '#' comment lines and blank lines removed.
std::vector<std::string> data_lines(std::istream& in);

/**
 * Dataset interchange CSV: header `label,<name1>,...,<named>`, one row per
 * sample. Lines starting with '#' are comments (configuration echo) and are
 * ignored on read.
 */
void write_dataset_csv(std::ostream& out, const Dataset& data,
                       const std::vector<std::string>& comments = {});
Dataset read_dataset_csv(std::istream& in);

void write_dataset_csv_file(const std::string& path, const Dataset& data,
                            const std::vector<std::string>& comments = {});
Dataset read_dataset_csv_file(const std::string& path);

}  // namespace firank
