#pragma once

#include <firank/imaging/lesion_image.hpp>

#include <string>

namespace firank::imaging {

/// Binary PGM (P5), 8- or 16-bit. Returns raw sample values.
Matrix read_pgm(const std::string& path);
/// Plain-text matrix: one image row per line, values separated by commas or whitespace.
Matrix read_matrix_csv(const std::string& path);

/// Dispatches on extension: .pgm -> PGM, anything else -> text matrix.
Matrix read_image(const std::string& path);
/// PGM masks use 0 / 255, text masks 0 / 1; other values raise ParseError.
Mask read_mask(const std::string& path);

/// 8-bit P5 writer; values are rounded and clamped to [0, 255].
void write_pgm(const std::string& path, const Matrix& pixels);
void write_mask_pgm(const std::string& path, const Mask& mask);

}  // namespace firank::imaging
