#pragma once

#include <cstdint>
#include <vector>

#include "wavefp/dwt.hpp"
#include "wavefp/matrix.hpp"

namespace wavefp {

struct CannyConfig {
    double sigma = 1.0;   // Gaussian smoothing std-dev; kernel radius ceil(3 sigma)
    double t_low = 0.1;   // hysteresis thresholds as fractions of the max
    double t_high = 0.3;  // gradient magnitude; 0 <= t_low < t_high
};

struct EdgeMap {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> mask;  // row-major, 1 = edge pixel
    Matrix grad_mag;                 // post-smoothing gradient magnitude

    bool at(std::size_t r, std::size_t c) const { return mask[r * cols + c] != 0; }
    std::size_t edge_count() const;
};

// Gaussian smoothing -> Sobel gradients -> non-maximum suppression along the
// quantized gradient direction (4 sectors) -> double-threshold hysteresis
// (strong >= t_high * max magnitude seeds; weak >= t_low * max magnitude kept
// iff 8-connected to a strong pixel). Borders use half-sample symmetric
// extension. Requires a plane of at least 3x3.
EdgeMap canny(const Matrix& plane, const CannyConfig& cfg);

// Per sub band (LL, LH, HL, HH order): edge density and the mean gradient
// magnitude over edge pixels (0 when the mask is empty) — 8 values per level.
std::vector<double> edge_features(const SubbandSet& bands, const CannyConfig& cfg);

}  // namespace wavefp
