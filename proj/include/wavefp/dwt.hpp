#pragma once

#include <array>
#include <string>
#include <vector>

#include "wavefp/image.hpp"
#include "wavefp/matrix.hpp"

namespace wavefp {

// Boundary handling for the separable transform. Symmetric (half-sample)
// extension is the feature-extraction default; periodic extension keeps the
// transform exactly orthogonal, so reconstruction and energy bookkeeping are
// exact in that mode.
enum class ExtensionMode { symmetric, periodic };

const char* to_string(ExtensionMode mode);
ExtensionMode extension_mode_from_string(const std::string& name);

// Orthogonal Daubechies filter pair. `lo` holds the scaling coefficients in
// natural order (h0 first); `hi` is the quadrature mirror,
// hi[j] = (-1)^j lo[L-1-j]. db2 uses the closed form (1 +- sqrt 3)/(4 sqrt 2)
// et al.; db4 taps come from the standard spectral-factorization table.
struct Wavelet {
    std::string name;
    std::vector<double> lo;
    std::vector<double> hi;

    // "db1" (Haar), "db2" or "db4"
    static Wavelet from_name(const std::string& name);
};

// One decomposition level. Plane letters index (x filter, y filter): hl is
// high-pass along x / low-pass along y — the horizontal-detail plane that
// responds to intensity change along x — lh is the converse vertical-detail
// plane, hh the diagonal one. All four planes share dimensions
// ceil(parent/2) per axis.
struct SubbandSet {
    int level = 0;
    Matrix ll, lh, hl, hh;
};

struct SubbandPyramid {
    std::array<SubbandSet, 3> levels;  // levels[k].level == k + 1
    std::size_t original_width = 0;
    std::size_t original_height = 0;
    std::string wavelet_id;
};

// Single-level separable 2-D analysis. Odd dimensions produce ceil-sized
// planes (the periodic mode virtually repeats the trailing sample).
SubbandSet dwt2_single(const Matrix& image, const Wavelet& wavelet, ExtensionMode mode);

// Single-level synthesis back to target_width x target_height. Exact (to
// rounding) in periodic mode; symmetric mode reconstructs approximately near
// the borders. Band planes must measure ceil(target/2) per axis.
Matrix idwt2_single(const SubbandSet& bands, const Wavelet& wavelet, std::size_t target_width,
                    std::size_t target_height, ExtensionMode mode);

// Three-level pyramid: level k+1 decomposes level k's LL plane. Requires at
// least a 16x16 image so the level-3 planes are 2x2 or larger.
SubbandPyramid decompose3(const GrayImage& image, const Wavelet& wavelet, ExtensionMode mode);

}  // namespace wavefp
