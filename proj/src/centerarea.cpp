#include "wavefp/centerarea.hpp"

#include <cmath>

#include "wavefp/errors.hpp"

namespace wavefp {

RowColStats row_col_stats(const Matrix& plane) {
    if (plane.empty()) throw EmptyInput("row_col_stats: empty plane");
    const std::size_t rows = plane.rows(), cols = plane.cols();
    RowColStats s;
    s.row_means.assign(rows, 0.0);
    s.row_vars.assign(rows, 0.0);
    s.col_means.assign(cols, 0.0);
    s.col_vars.assign(cols, 0.0);

    for (std::size_t r = 0; r < rows; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < cols; ++c) sum += plane.at(r, c);
        const double mean = sum / static_cast<double>(cols);
        double acc = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double d = plane.at(r, c) - mean;
            acc += d * d;
        }
        s.row_means[r] = mean;
        s.row_vars[r] = acc / static_cast<double>(cols);
    }
    for (std::size_t c = 0; c < cols; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < rows; ++r) sum += plane.at(r, c);
        const double mean = sum / static_cast<double>(rows);
        double acc = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            const double d = plane.at(r, c) - mean;
            acc += d * d;
        }
        s.col_means[c] = mean;
        s.col_vars[c] = acc / static_cast<double>(rows);
    }
    return s;
}

CenterPoint find_center(const Matrix& plane) {
    const RowColStats s = row_col_stats(plane);
    CenterPoint cp;
    for (std::size_t r = 0; r < s.row_vars.size(); ++r) {
        if (s.row_vars[r] > s.row_vars[cp.row]) cp.row = r;
    }
    for (std::size_t c = 0; c < s.col_vars.size(); ++c) {
        if (s.col_vars[c] > s.col_vars[cp.col]) cp.col = c;
    }
    cp.row_variance = s.row_vars[cp.row];
    cp.col_variance = s.col_vars[cp.col];
    return cp;
}

Matrix center_window(const Matrix& plane, const CenterPoint& center, std::size_t win) {
    const std::size_t rows = plane.rows(), cols = plane.cols();
    const std::size_t wh = std::min(win, rows), ww = std::min(win, cols);
    std::size_t r0 = (center.row > wh / 2) ? center.row - wh / 2 : 0;
    std::size_t c0 = (center.col > ww / 2) ? center.col - ww / 2 : 0;
    r0 = std::min(r0, rows - wh);
    c0 = std::min(c0, cols - ww);
    Matrix out(wh, ww);
    for (std::size_t r = 0; r < wh; ++r)
        for (std::size_t c = 0; c < ww; ++c) out.at(r, c) = plane.at(r0 + r, c0 + c);
    return out;
}

std::vector<double> center_features(const SubbandSet& bands, const GlcmConfig& cfg) {
    std::vector<double> out;
    out.reserve(16);
    for (const Matrix* plane : {&bands.ll, &bands.lh, &bands.hl, &bands.hh}) {
        const Matrix window = center_window(*plane, find_center(*plane), 16);
        const TextureFeatures f =
            features_of_plane(window, window.min_value(), window.max_value(), cfg);
        out.push_back(std::isnan(f.correlation) ? 0.0 : f.correlation);
        out.push_back(f.contrast);
        out.push_back(f.homogeneity);
        out.push_back(f.energy);
    }
    return out;
}

}  // namespace wavefp
