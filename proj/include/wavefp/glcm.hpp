#pragma once

#include <vector>

#include "wavefp/matrix.hpp"

namespace wavefp {

// Quantized plane: one integer bin per pixel, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<int> values;

    int at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    int& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
};

struct GlcmConfig {
    int levels = 8;
    int offset_dy = 0;
    int offset_dx = 1;
    bool symmetric = true;
};

// Maps each value v to floor(levels * (clamp(v, lo, hi) - lo) / (hi - lo)),
// with v == hi landing in the top bin. Requires lo < hi and levels >= 2.
IntMatrix quantize(const Matrix& m, int levels, double lo, double hi);

// Normalized gray-level co-occurrence matrix at a fixed pixel displacement.
struct Glcm {
    int levels = 0;
    int offset_dy = 0, offset_dx = 1;
    bool symmetric = true;
    std::vector<double> p;  // levels x levels, row-major, sums to 1

    double at(int i, int j) const { return p[static_cast<std::size_t>(i) * levels + j]; }
};

// Counts every in-bounds pixel pair (r, c) -> (r + dy, c + dx); the symmetric
// variant also counts the reverse pair. Raises NoPairs when the plane is too
// small for the offset.
Glcm glcm(const IntMatrix& q, int levels, int offset_dy, int offset_dx, bool symmetric);

struct TextureFeatures {
    double correlation = 0;  // NaN for constant input
    double contrast = 0;
    double energy = 0;
    double homogeneity = 0;
};

// The four scalar texture statistics of a normalized GLCM. Indices i, j run
// 0..levels-1; the correlation means and deviations are the marginal
// statistics of p. A concentrated (constant-input) GLCM yields contrast 0,
// energy 1, homogeneity 1 and NaN correlation.
TextureFeatures features(const Glcm& g);

// True when at least one (r, c) -> (r + dy, c + dx) pair fits in the plane.
bool has_offset_pairs(std::size_t rows, std::size_t cols, int offset_dy, int offset_dx);

// Texture features of an arbitrary real-valued plane quantized over
// [lo, hi]. Degenerate planes — lo == hi, or too small for the offset — are
// treated as constant texture (contrast 0, energy 1, homogeneity 1,
// correlation NaN).
TextureFeatures features_of_plane(const Matrix& plane, double lo, double hi, const GlcmConfig& cfg);

}  // namespace wavefp
