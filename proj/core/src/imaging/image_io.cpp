#include <firank/imaging/image_io.hpp>
#include <firank/core/csv.hpp>
#include <firank/error.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace firank::imaging {

namespace {

bool has_extension(const std::string& path, std::string_view ext) {
    if (path.size() < ext.size()) return false;
    auto tail = path.substr(path.size() - ext.size());
    std::transform(tail.begin(), tail.end(), tail.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return tail == ext;
}

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::istream& in, const std::string& path) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    if (tok.empty()) fail(ErrorCode::ParseError, "'" + path + "': truncated PGM header");
    return tok;
}

int header_int(std::istream& in, const std::string& path) {
    const auto tok = header_token(in, path);
    try {
        const int v = parse_int(tok);
        if (v <= 0) throw Error(ErrorCode::ParseError, tok);
        return v;
    } catch (const Error&) {
        fail(ErrorCode::ParseError, "'" + path + "': bad PGM header field '" + tok + "'");
    }
}

}  // namespace

Matrix read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5') {
        fail(ErrorCode::ParseError, "'" + path + "': not a binary PGM (P5) file");
    }
    const int width = header_int(in, path);
    const int height = header_int(in, path);
    const int maxval = header_int(in, path);
    if (maxval > 65535) fail(ErrorCode::ParseError, "'" + path + "': PGM maxval above 65535");
    // header_token consumed exactly one whitespace byte after maxval.

    const int bytes = maxval < 256 ? 1 : 2;
    std::vector<unsigned char> raw(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
                                   static_cast<std::size_t>(bytes));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
        fail(ErrorCode::ParseError, "'" + path + "': truncated PGM pixel data");
    }
    Matrix m(height, width);
    std::size_t k = 0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            int v = raw[k++];
            if (bytes == 2) v = (v << 8) | raw[k++];
            if (v > maxval) fail(ErrorCode::ParseError, "'" + path + "': sample exceeds maxval");
            m(r, c) = v;
        }
    }
    return m;
}

Matrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    for (const auto& line : data_lines(in)) {
        std::string normalized = line;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream ss(normalized);
        std::vector<double> row;
        std::string tok;
        try {
            while (ss >> tok) row.push_back(parse_real(tok));
        } catch (const Error& e) {
            fail(ErrorCode::ParseError, "'" + path + "': " + e.what());
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            fail(ErrorCode::ParseError, "'" + path + "': ragged matrix rows");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) fail(ErrorCode::ParseError, "'" + path + "': empty matrix");
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return m;
}

Matrix read_image(const std::string& path) {
    return has_extension(path, ".pgm") ? read_pgm(path) : read_matrix_csv(path);
}

Mask read_mask(const std::string& path) {
    const bool pgm = has_extension(path, ".pgm");
    const Matrix m = pgm ? read_pgm(path) : read_matrix_csv(path);
    const double on = pgm ? 255.0 : 1.0;
    Mask mask(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 0.0) {
                mask(r, c) = 0;
            } else if (m(r, c) == on) {
                mask(r, c) = 1;
            } else {
                fail(ErrorCode::ParseError, "'" + path + "': mask value " + format_real(m(r, c)) +
                                                " is not 0 or " + format_real(on));
            }
        }
    }
    return mask;
}

void write_pgm(const std::string& path, const Matrix& pixels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << "P5\n" << pixels.cols() << ' ' << pixels.rows() << "\n255\n";
    for (Eigen::Index r = 0; r < pixels.rows(); ++r) {
        for (Eigen::Index c = 0; c < pixels.cols(); ++c) {
            const double v = std::clamp(std::round(pixels(r, c)), 0.0, 255.0);
            out.put(static_cast<char>(static_cast<unsigned char>(v)));
        }
    }
}

void write_mask_pgm(const std::string& path, const Mask& mask) {
    write_pgm(path, mask.cast<double>() * 255.0);
}

}  // namespace firank::imaging
