#pragma once

#include <vector>

#include "wavefp/dwt.hpp"
#include "wavefp/glcm.hpp"
#include "wavefp/matrix.hpp"

namespace wavefp {

struct RowColStats {
    std::vector<double> row_means, row_vars;  // one entry per row
    std::vector<double> col_means, col_vars;  // one entry per column
};

// Population mean and variance of every row and column (divisor = the
// actual number of elements in that row or column).
RowColStats row_col_stats(const Matrix& plane);

struct CenterPoint {
    std::size_t row = 0, col = 0;
    double row_variance = 0, col_variance = 0;
};

// The pixel where the highest row variance meets the highest column
// variance; ties break toward the smallest index.
CenterPoint find_center(const Matrix& plane);

// The win x win crop around the center, shifted inward at plane borders; it
// only shrinks when the plane itself is smaller than win.
Matrix center_window(const Matrix& plane, const CenterPoint& center, std::size_t win = 16);

// The 16 center-area features of one level: per sub band (LL, LH, HL, HH
// order) the GLCM statistics of the 16x16 window around that band's own
// center, quantized over the window's own value range, emitted as
// [correlation, contrast, homogeneity, energy] with NaN correlation mapped
// to 0.
std::vector<double> center_features(const SubbandSet& bands, const GlcmConfig& cfg);

}  // namespace wavefp
