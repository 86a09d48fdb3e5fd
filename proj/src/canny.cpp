#include "wavefp/canny.hpp"

#include <cmath>
#include <numbers>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t reflect(long long i, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    while (i < 0 || i >= nn) i = (i < 0) ? -i - 1 : 2 * nn - i - 1;
    return static_cast<std::size_t>(i);
}

void validate(const CannyConfig& cfg) {
    if (!(cfg.sigma > 0.0)) throw InvalidConfig("canny: sigma must be > 0");
    if (!(cfg.t_low >= 0.0) || !(cfg.t_low < cfg.t_high))
        throw InvalidConfig("canny: need 0 <= t_low < t_high");
}

std::vector<double> gaussian_kernel(double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> g(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        g[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        sum += g[i + radius];
    }
    for (double& v : g) v /= sum;
    return g;
}

Matrix gaussian_smooth(const Matrix& in, const std::vector<double>& g) {
    const std::size_t rows = in.rows(), cols = in.cols();
    const int radius = static_cast<int>(g.size() / 2);
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            double acc = 0.0;
            for (int ky = -radius; ky <= radius; ++ky) {
                const std::size_t rr = reflect(static_cast<long long>(r) + ky, rows);
                for (int kx = -radius; kx <= radius; ++kx) {
                    const std::size_t cc = reflect(static_cast<long long>(c) + kx, cols);
                    acc += g[ky + radius] * g[kx + radius] * in.at(rr, cc);
                }
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

// gradient direction quantized to 4 sectors (0deg, 45deg, 90deg, 135deg)
int direction_sector(double gx, double gy) {
    double a = std::atan2(gy, gx);
    if (a < 0.0) a += kPi;
    if (a < kPi / 8) return 0;
    if (a < 3 * kPi / 8) return 1;
    if (a < 5 * kPi / 8) return 2;
    if (a < 7 * kPi / 8) return 3;
    return 0;
}

}  // namespace

std::size_t EdgeMap::edge_count() const {
    std::size_t n = 0;
    for (std::uint8_t v : mask) n += v;
    return n;
}

EdgeMap canny(const Matrix& plane, const CannyConfig& cfg) {
    validate(cfg);
    if (plane.rows() < 3 || plane.cols() < 3)
        throw PlaneTooSmall("canny needs at least a 3x3 plane, got " +
                            std::to_string(plane.cols()) + "x" + std::to_string(plane.rows()));
    const std::size_t rows = plane.rows(), cols = plane.cols();

    const Matrix smoothed = gaussian_smooth(plane, gaussian_kernel(cfg.sigma));

    static const double kSobelX[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    static const double kSobelY[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};

    Matrix mag(rows, cols);
    std::vector<int> sector(rows * cols, 0);
    double max_mag = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            // positive and negative taps are summed separately so that a
            // constant neighborhood cancels to exactly zero
            double gx_pos = 0.0, gx_neg = 0.0, gy_pos = 0.0, gy_neg = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                const std::size_t rr = reflect(static_cast<long long>(r) + dy, rows);
                for (int dx = -1; dx <= 1; ++dx) {
                    const std::size_t cc = reflect(static_cast<long long>(c) + dx, cols);
                    const double v = smoothed.at(rr, cc);
                    const double wx = kSobelX[dy + 1][dx + 1];
                    const double wy = kSobelY[dy + 1][dx + 1];
                    if (wx > 0) gx_pos += wx * v;
                    else if (wx < 0) gx_neg += -wx * v;
                    if (wy > 0) gy_pos += wy * v;
                    else if (wy < 0) gy_neg += -wy * v;
                }
            }
            const double gx = gx_pos - gx_neg;
            const double gy = gy_pos - gy_neg;
            const double m = std::sqrt(gx * gx + gy * gy);
            mag.at(r, c) = m;
            sector[r * cols + c] = direction_sector(gx, gy);
            if (m > max_mag) max_mag = m;
        }
    }

    // non-maximum suppression; the strict test against the first neighbor
    // breaks the two-pixel tie of a symmetric ramp
    static const int kNeighbors[4][2][2] = {
        {{0, -1}, {0, 1}}, {{-1, -1}, {1, 1}}, {{-1, 0}, {1, 0}}, {{-1, 1}, {1, -1}}};
    Matrix nms(rows, cols, 0.0);
    auto mag_at = [&](long long r, long long c) -> double {
        if (r < 0 || c < 0 || r >= static_cast<long long>(rows) || c >= static_cast<long long>(cols))
            return 0.0;
        return mag.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const int s = sector[r * cols + c];
            const double m = mag.at(r, c);
            const double n1 = mag_at(static_cast<long long>(r) + kNeighbors[s][0][0],
                                     static_cast<long long>(c) + kNeighbors[s][0][1]);
            const double n2 = mag_at(static_cast<long long>(r) + kNeighbors[s][1][0],
                                     static_cast<long long>(c) + kNeighbors[s][1][1]);
            if (m > n1 && m >= n2) nms.at(r, c) = m;
        }
    }

    const double t_high = cfg.t_high * max_mag;
    const double t_low = cfg.t_low * max_mag;

    EdgeMap out;
    out.rows = rows;
    out.cols = cols;
    out.mask.assign(rows * cols, 0);
    out.grad_mag = mag;

    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (nms.data()[i] > 0.0 && nms.data()[i] >= t_high) {
            out.mask[i] = 1;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        const auto r = static_cast<long long>(i / cols), c = static_cast<long long>(i % cols);
        for (long long dr = -1; dr <= 1; ++dr) {
            for (long long dc = -1; dc <= 1; ++dc) {
                const long long rr = r + dr, cc = c + dc;
                if (rr < 0 || cc < 0 || rr >= static_cast<long long>(rows) ||
                    cc >= static_cast<long long>(cols))
                    continue;
                const std::size_t j = static_cast<std::size_t>(rr) * cols + static_cast<std::size_t>(cc);
                if (out.mask[j]) continue;
                if (nms.data()[j] > 0.0 && nms.data()[j] >= t_low) {
                    out.mask[j] = 1;
                    stack.push_back(j);
                }
            }
        }
    }
    return out;
}

std::vector<double> edge_features(const SubbandSet& bands, const CannyConfig& cfg) {
    std::vector<double> out;
    out.reserve(8);
    for (const Matrix* plane : {&bands.ll, &bands.lh, &bands.hl, &bands.hh}) {
        const EdgeMap em = canny(*plane, cfg);
        const std::size_t edges = em.edge_count();
        out.push_back(static_cast<double>(edges) / static_cast<double>(plane->size()));
        double mean_mag = 0.0;
        if (edges > 0) {
            double sum = 0.0;
            for (std::size_t i = 0; i < em.mask.size(); ++i)
                if (em.mask[i]) sum += em.grad_mag.data()[i];
            mean_mag = sum / static_cast<double>(edges);
        }
        out.push_back(mean_mag);
    }
    return out;
}

}  // namespace wavefp
