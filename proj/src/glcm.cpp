#include "wavefp/glcm.hpp"

#include <cmath>
#include <limits>

#include "wavefp/errors.hpp"

namespace wavefp {

IntMatrix quantize(const Matrix& m, int levels, double lo, double hi) {
    if (!(lo < hi)) throw BadRange("quantize: need lo < hi");
    if (levels < 2) throw BadRange("quantize: need at least 2 levels");
    IntMatrix q;
    q.rows = m.rows();
    q.cols = m.cols();
    q.values.resize(m.size());
    const double scale = static_cast<double>(levels) / (hi - lo);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double v = std::clamp(m.data()[i], lo, hi);
        int bin = static_cast<int>(std::floor((v - lo) * scale));
        if (bin >= levels) bin = levels - 1;  // v == hi
        if (bin < 0) bin = 0;
        q.values[i] = bin;
    }
    return q;
}

bool has_offset_pairs(std::size_t rows, std::size_t cols, int offset_dy, int offset_dx) {
    const auto ady = static_cast<std::size_t>(std::abs(offset_dy));
    const auto adx = static_cast<std::size_t>(std::abs(offset_dx));
    return rows > ady && cols > adx;
}

Glcm glcm(const IntMatrix& q, int levels, int offset_dy, int offset_dx, bool symmetric) {
    if (levels < 2) throw BadRange("glcm: need at least 2 levels");
    if (offset_dy == 0 && offset_dx == 0) throw BadRange("glcm: offset (0,0) pairs pixels with themselves");
    for (int v : q.values)
        if (v < 0 || v >= levels)
            throw BadRange("glcm: quantized value " + std::to_string(v) + " outside [0, levels)");

    Glcm g;
    g.levels = levels;
    g.offset_dy = offset_dy;
    g.offset_dx = offset_dx;
    g.symmetric = symmetric;
    g.p.assign(static_cast<std::size_t>(levels) * levels, 0.0);

    const auto rows = static_cast<long long>(q.rows), cols = static_cast<long long>(q.cols);
    long long total = 0;
    for (long long r = 0; r < rows; ++r) {
        for (long long c = 0; c < cols; ++c) {
            const long long r2 = r + offset_dy, c2 = c + offset_dx;
            if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) continue;
            const int a = q.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            const int b = q.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(c2));
            g.p[static_cast<std::size_t>(a) * levels + b] += 1.0;
            ++total;
            if (symmetric) {
                g.p[static_cast<std::size_t>(b) * levels + a] += 1.0;
                ++total;
            }
        }
    }
    if (total == 0)
        throw NoPairs("glcm: no pixel pairs for offset (" + std::to_string(offset_dy) + "," +
                      std::to_string(offset_dx) + ") in a " + std::to_string(q.rows) + "x" +
                      std::to_string(q.cols) + " plane");
    for (double& v : g.p) v /= static_cast<double>(total);
    return g;
}

TextureFeatures features(const Glcm& g) {
    const int L = g.levels;
    double mu_i = 0.0, mu_j = 0.0;
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const double pij = g.at(i, j);
            mu_i += i * pij;
            mu_j += j * pij;
        }
    }
    double var_i = 0.0, var_j = 0.0, cov = 0.0;
    TextureFeatures f;
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const double pij = g.at(i, j);
            const double di = i - mu_i, dj = j - mu_j;
            var_i += di * di * pij;
            var_j += dj * dj * pij;
            cov += di * dj * pij;
            f.contrast += (i - j) * (i - j) * pij;
            f.energy += pij * pij;
            f.homogeneity += pij / (1.0 + std::abs(i - j));
        }
    }
    f.correlation = (var_i <= 0.0 || var_j <= 0.0)
                        ? std::numeric_limits<double>::quiet_NaN()
                        : cov / (std::sqrt(var_i) * std::sqrt(var_j));
    return f;
}

TextureFeatures features_of_plane(const Matrix& plane, double lo, double hi, const GlcmConfig& cfg) {
    if (lo > hi) throw BadRange("features_of_plane: lo > hi");
    if (lo == hi || !has_offset_pairs(plane.rows(), plane.cols(), cfg.offset_dy, cfg.offset_dx)) {
        TextureFeatures f;
        f.correlation = std::numeric_limits<double>::quiet_NaN();
        f.contrast = 0.0;
        f.energy = 1.0;
        f.homogeneity = 1.0;
        return f;
    }
    const IntMatrix q = quantize(plane, cfg.levels, lo, hi);
    return features(glcm(q, cfg.levels, cfg.offset_dy, cfg.offset_dx, cfg.symmetric));
}

}  // namespace wavefp
