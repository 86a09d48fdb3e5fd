#include "wavefp/orientation.hpp"

#include <cmath>
#include <numbers>

#include "wavefp/errors.hpp"

namespace wavefp {

namespace {
constexpr double kPi = std::numbers::pi;
}

GradientField gradient_from_subbands(const SubbandSet& bands, bool swap_axes) {
    GradientField f;
    f.gx = swap_axes ? bands.lh : bands.hl;
    f.gy = swap_axes ? bands.hl : bands.lh;
    const std::size_t rows = f.gx.rows(), cols = f.gx.cols();
    f.magnitude = Matrix(rows, cols);
    f.angle = Matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double gx = f.gx.at(r, c), gy = f.gy.at(r, c);
            f.magnitude.at(r, c) = std::abs(gx) + std::abs(gy);
            if (gx == 0.0 && gy == 0.0) {
                f.angle.at(r, c) = 0.0;
            } else {
                double a = std::atan2(gx, gy);  // full-quadrant form of tan^-1(gx/gy)
                if (a <= -kPi / 2) a += kPi;
                else if (a > kPi / 2) a -= kPi;
                f.angle.at(r, c) = a;
            }
        }
    }
    return f;
}

CoherenceMap coherence(const GradientField& field, int window) {
    const std::size_t rows = field.magnitude.rows(), cols = field.magnitude.cols();
    const int half = window / 2;
    CoherenceMap out;
    out.delta = Matrix(rows, cols);
    for (std::size_t m = 0; m < rows; ++m) {
        for (std::size_t n = 0; n < cols; ++n) {
            const double theta_mn = field.angle.at(m, n);
            double num = 0.0, den = 0.0;
            const std::size_t r0 = (m < static_cast<std::size_t>(half)) ? 0 : m - half;
            const std::size_t r1 = std::min(rows - 1, m + half);
            const std::size_t c0 = (n < static_cast<std::size_t>(half)) ? 0 : n - half;
            const std::size_t c1 = std::min(cols - 1, n + half);
            for (std::size_t i = r0; i <= r1; ++i) {
                for (std::size_t j = c0; j <= c1; ++j) {
                    const double g = field.magnitude.at(i, j);
                    num += g * std::cos(theta_mn - field.angle.at(i, j));
                    den += g;
                }
            }
            out.delta.at(m, n) = (den > 0.0) ? std::clamp(num / den, -1.0, 1.0) : 0.0;
        }
    }
    return out;
}

OrientationMap dominant_orientation(const GradientField& field, const CoherenceMap& coh, int block) {
    if (field.angle.rows() != coh.delta.rows() || field.angle.cols() != coh.delta.cols())
        throw DimensionMismatch("dominant_orientation: field and coherence map differ in size");
    const auto b = static_cast<std::size_t>(block);
    const std::size_t brows = field.angle.rows() / b;
    const std::size_t bcols = field.angle.cols() / b;
    OrientationMap out;
    out.theta = Matrix(brows, bcols);
    for (std::size_t br = 0; br < brows; ++br) {
        for (std::size_t bc = 0; bc < bcols; ++bc) {
            double num = 0.0, den = 0.0;
            for (std::size_t r = br * b; r < (br + 1) * b; ++r) {
                for (std::size_t c = bc * b; c < (bc + 1) * b; ++c) {
                    const double d2 = coh.delta.at(r, c) * coh.delta.at(r, c);
                    const double two_theta = 2.0 * field.angle.at(r, c);
                    num += d2 * std::sin(two_theta);
                    den += d2 * std::cos(two_theta);
                }
            }
            double theta;
            if (num == 0.0 && den == 0.0) {
                theta = kPi / 2;
            } else {
                theta = 0.5 * std::atan2(num, den) + kPi / 2;
                theta = std::clamp(theta, 0.0, kPi);
            }
            out.theta.at(br, bc) = theta;
        }
    }
    return out;
}

std::vector<double> directional_features(const SubbandSet& bands, const GlcmConfig& cfg,
                                         bool swap_axes) {
    if (bands.ll.rows() < 8 || bands.ll.cols() < 8)
        throw BandTooSmall("directional_features needs an LL plane of at least 8x8, got " +
                           std::to_string(bands.ll.cols()) + "x" + std::to_string(bands.ll.rows()));
    const GradientField field = gradient_from_subbands(bands, swap_axes);
    const CoherenceMap coh = coherence(field, 5);
    const OrientationMap omap = dominant_orientation(field, coh, 8);

    const TextureFeatures fc = features_of_plane(coh.delta, -1.0, 1.0, cfg);
    const TextureFeatures fo = features_of_plane(omap.theta, 0.0, kPi, cfg);

    std::vector<double> out;
    out.reserve(8);
    for (const TextureFeatures& f : {fc, fo}) {
        out.push_back(std::isnan(f.correlation) ? 0.0 : f.correlation);
        out.push_back(f.contrast);
        out.push_back(f.homogeneity);
        out.push_back(f.energy);
    }
    return out;
}

}  // namespace wavefp
