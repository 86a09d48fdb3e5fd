#pragma once

#include <filesystem>

#include "wavefp/matrix.hpp"

namespace wavefp {

// Grayscale raster with real-valued intensities in [0, 255].
// pixels.at(row, col); row 0 is the top scanline.
struct GrayImage {
    Matrix pixels;

    std::size_t width() const { return pixels.cols(); }
    std::size_t height() const { return pixels.rows(); }
};

// Loads a PGM (P2 or P5, maxval <= 255) or PNG image. The format is sniffed
// from the file's magic bytes, not its extension. Color PNG input is reduced
// to gray as 0.299 R + 0.587 G + 0.114 B.
GrayImage load_image(const std::filesystem::path& path);

// Writes a binary (P5) PGM with maxval 255. Samples are rounded to the
// nearest integer and clamped to [0, 255].
void save_pgm(const GrayImage& image, const std::filesystem::path& path);

}  // namespace wavefp
