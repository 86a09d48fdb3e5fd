#pragma once

#include <vector>

#include "wavefp/dwt.hpp"
#include "wavefp/glcm.hpp"
#include "wavefp/matrix.hpp"

namespace wavefp {

// Gradient of a level's LL plane, read off the detail sub bands: gx from HL
// (horizontal detail), gy from LH. All planes share the LL dimensions.
struct GradientField {
    Matrix gx, gy;
    Matrix magnitude;  // |gx| + |gy|
    Matrix angle;      // atan2(gx, gy) folded into (-pi/2, pi/2]; 0 where gx == gy == 0
};

// Windowed gradient-direction coherence, one value per pixel in [-1, 1].
struct CoherenceMap {
    Matrix delta;
};

// Dominant ridge-flow angle per non-overlapping 8x8 block, values in [0, pi].
struct OrientationMap {
    Matrix theta;
};

// swap_axes exchanges the HL/LH roles of gx and gy.
GradientField gradient_from_subbands(const SubbandSet& bands, bool swap_axes = false);

// delta(m,n) = sum G_ij cos(theta_mn - theta_ij) / sum G_ij over a window x
// window neighborhood centered at (m,n); border windows shrink to the plane,
// and an all-zero-gradient window yields 0.
CoherenceMap coherence(const GradientField& field, int window = 5);

// Per block: theta = atan2(sum delta^2 sin 2 theta, sum delta^2 cos 2 theta) / 2
// + pi/2. Trailing partial blocks are dropped; an all-zero block yields pi/2.
OrientationMap dominant_orientation(const GradientField& field, const CoherenceMap& coh, int block = 8);

// The 8 directional features of one level: GLCM statistics of the coherence
// map (quantized over [-1, 1]) followed by those of the orientation map
// (quantized over [0, pi]), each emitted as
// [correlation, contrast, homogeneity, energy] with NaN correlation mapped
// to 0. The LL plane must be at least 8x8.
std::vector<double> directional_features(const SubbandSet& bands, const GlcmConfig& cfg,
                                         bool swap_axes = false);

}  // namespace wavefp
