#include "wavefp/dwt.hpp"

#include <cmath>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

constexpr std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

// Half-sample symmetric fold: ... x1 x0 | x0 x1 ... x(n-1) | x(n-1) x(n-2) ...
std::size_t reflect_index(long long i, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    while (i < 0 || i >= nn) i = (i < 0) ? -i - 1 : 2 * nn - i - 1;
    return static_cast<std::size_t>(i);
}

// One analysis pass: approx[k] = sum_j lo[j] x(2k+j), detail likewise with
// hi. Periodic mode reads a virtually padded even-length signal (odd n
// repeats the last sample), which keeps the transform orthogonal.
void dwt1d(const std::vector<double>& x, const Wavelet& w, ExtensionMode mode,
           std::vector<double>& approx, std::vector<double>& detail) {
    const std::size_t n = x.size();
    const std::size_t half = ceil_half(n);
    const std::size_t taps = w.lo.size();
    const auto period = static_cast<long long>(2 * half);
    approx.assign(half, 0.0);
    detail.assign(half, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        double a = 0.0, d = 0.0;
        for (std::size_t j = 0; j < taps; ++j) {
            std::size_t src;
            if (mode == ExtensionMode::periodic) {
                const auto i = static_cast<long long>(2 * k + j) % period;
                src = (i >= static_cast<long long>(n)) ? n - 1 : static_cast<std::size_t>(i);
            } else {
                src = reflect_index(static_cast<long long>(2 * k + j), n);
            }
            a += w.lo[j] * x[src];
            d += w.hi[j] * x[src];
        }
        approx[k] = a;
        detail[k] = d;
    }
}

// Transpose of the analysis operator. Exact inverse in periodic mode.
std::vector<double> idwt1d(const std::vector<double>& approx, const std::vector<double>& detail,
                           const Wavelet& w, std::size_t target, ExtensionMode mode) {
    const std::size_t p = approx.size();
    const std::size_t m = 2 * p;
    if (!(target == m || target + 1 == m))
        throw DimensionMismatch("cannot rebuild a length-" + std::to_string(target) +
                                " signal from " + std::to_string(p) + " coefficients per band");
    const std::size_t taps = w.lo.size();
    if (mode == ExtensionMode::periodic) {
        std::vector<double> rec(m, 0.0);
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t j = 0; j < taps; ++j)
                rec[(2 * k + j) % m] += approx[k] * w.lo[j] + detail[k] * w.hi[j];
        rec.resize(target);
        return rec;
    }
    std::vector<double> rec(target, 0.0);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < taps; ++j)
            rec[reflect_index(static_cast<long long>(2 * k + j), target)] +=
                approx[k] * w.lo[j] + detail[k] * w.hi[j];
    return rec;
}

std::vector<double> get_row(const Matrix& m, std::size_t r) {
    std::vector<double> v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m.at(r, c);
    return v;
}

std::vector<double> get_col(const Matrix& m, std::size_t c) {
    std::vector<double> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
    return v;
}

void set_col(Matrix& m, std::size_t c, const std::vector<double>& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = v[r];
}

}  // namespace

const char* to_string(ExtensionMode mode) {
    return mode == ExtensionMode::symmetric ? "symmetric" : "periodic";
}

ExtensionMode extension_mode_from_string(const std::string& name) {
    if (name == "symmetric") return ExtensionMode::symmetric;
    if (name == "periodic") return ExtensionMode::periodic;
    throw InvalidConfig("unknown extension mode '" + name + "' (expected symmetric or periodic)");
}

Wavelet Wavelet::from_name(const std::string& name) {
    Wavelet w;
    w.name = name;
    if (name == "db1" || name == "haar") {
        const double s = 1.0 / std::sqrt(2.0);
        w.lo = {s, s};
    } else if (name == "db2") {
        const double r3 = std::sqrt(3.0);
        const double den = 4.0 * std::sqrt(2.0);
        w.lo = {(1.0 + r3) / den, (3.0 + r3) / den, (3.0 - r3) / den, (1.0 - r3) / den};
    } else if (name == "db4") {
        w.lo = {0.23037781330889615,   0.7148465705529149,   0.6308807679298586,
                -0.027983769416858723, -0.18703481171909234, 0.030841381835560705,
                0.03288301166688512,   -0.010597401785069002};
    } else {
        throw InvalidConfig("unknown wavelet '" + name + "' (expected db1, db2 or db4)");
    }
    const std::size_t taps = w.lo.size();
    w.hi.resize(taps);
    for (std::size_t j = 0; j < taps; ++j)
        w.hi[j] = ((j % 2) ? -1.0 : 1.0) * w.lo[taps - 1 - j];
    return w;
}

SubbandSet dwt2_single(const Matrix& image, const Wavelet& wavelet, ExtensionMode mode) {
    if (image.empty()) throw EmptyInput("dwt2_single: empty input matrix");
    const std::size_t h = image.rows(), w = image.cols();
    const std::size_t cw = ceil_half(w), ch = ceil_half(h);

    // pass 1: each row, along x
    Matrix low_x(h, cw), high_x(h, cw);
    std::vector<double> a, d;
    for (std::size_t r = 0; r < h; ++r) {
        dwt1d(get_row(image, r), wavelet, mode, a, d);
        for (std::size_t c = 0; c < cw; ++c) {
            low_x.at(r, c) = a[c];
            high_x.at(r, c) = d[c];
        }
    }

    // pass 2: each column, along y
    SubbandSet out;
    out.ll = Matrix(ch, cw);
    out.lh = Matrix(ch, cw);
    out.hl = Matrix(ch, cw);
    out.hh = Matrix(ch, cw);
    for (std::size_t c = 0; c < cw; ++c) {
        dwt1d(get_col(low_x, c), wavelet, mode, a, d);
        for (std::size_t r = 0; r < ch; ++r) {
            out.ll.at(r, c) = a[r];
            out.lh.at(r, c) = d[r];
        }
        dwt1d(get_col(high_x, c), wavelet, mode, a, d);
        for (std::size_t r = 0; r < ch; ++r) {
            out.hl.at(r, c) = a[r];
            out.hh.at(r, c) = d[r];
        }
    }
    out.level = 1;
    return out;
}

Matrix idwt2_single(const SubbandSet& bands, const Wavelet& wavelet, std::size_t target_width,
                    std::size_t target_height, ExtensionMode mode) {
    const std::size_t ph = bands.ll.rows(), pw = bands.ll.cols();
    auto same = [&](const Matrix& m) { return m.rows() == ph && m.cols() == pw; };
    if (!same(bands.lh) || !same(bands.hl) || !same(bands.hh))
        throw DimensionMismatch("idwt2_single: sub-band planes differ in size");
    if (ph == 0) throw EmptyInput("idwt2_single: empty bands");
    if (ceil_half(target_height) != ph || ceil_half(target_width) != pw)
        throw DimensionMismatch("idwt2_single: target size " + std::to_string(target_width) + "x" +
                                std::to_string(target_height) + " does not match " +
                                std::to_string(pw) + "x" + std::to_string(ph) + " band planes");

    // columns first (undo pass 2), then rows
    Matrix low_x(target_height, pw), high_x(target_height, pw);
    for (std::size_t c = 0; c < pw; ++c) {
        set_col(low_x, c, idwt1d(get_col(bands.ll, c), get_col(bands.lh, c), wavelet, target_height, mode));
        set_col(high_x, c, idwt1d(get_col(bands.hl, c), get_col(bands.hh, c), wavelet, target_height, mode));
    }
    Matrix out(target_height, target_width);
    for (std::size_t r = 0; r < target_height; ++r) {
        const std::vector<double> row = idwt1d(get_row(low_x, r), get_row(high_x, r), wavelet, target_width, mode);
        for (std::size_t c = 0; c < target_width; ++c) out.at(r, c) = row[c];
    }
    return out;
}

SubbandPyramid decompose3(const GrayImage& image, const Wavelet& wavelet, ExtensionMode mode) {
    if (image.width() < 16 || image.height() < 16)
        throw ImageTooSmall("decompose3 needs at least a 16x16 image, got " +
                            std::to_string(image.width()) + "x" + std::to_string(image.height()));
    SubbandPyramid pyr;
    pyr.original_width = image.width();
    pyr.original_height = image.height();
    pyr.wavelet_id = wavelet.name;
    const Matrix* input = &image.pixels;
    for (int level = 0; level < 3; ++level) {
        pyr.levels[level] = dwt2_single(*input, wavelet, mode);
        pyr.levels[level].level = level + 1;
        input = &pyr.levels[level].ll;
    }
    return pyr;
}

}  // namespace wavefp
