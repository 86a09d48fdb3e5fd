#include "wavefp/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kBlock = 8;
constexpr int kMaxShift = 3;

// mt19937_64 output mapped to [0, 1); the distribution helpers are hand
// rolled because the std ones are implementation-defined sequences.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 step over the combined value
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

GrayImage render_fingerprint(const SynthParams& params) {
    if (params.width == 0 || params.height == 0) throw EmptyInput("render_fingerprint: empty size");
    if (!(params.ridge_frequency > 0.0 && params.ridge_frequency < 0.5))
        throw BadRange("render_fingerprint: ridge_frequency must lie in (0, 0.5)");
    if (params.noise_sigma < 0.0) throw BadRange("render_fingerprint: negative noise_sigma");

    const Matrix& field = params.orientation_field;
    std::mt19937_64 rng(params.seed);
    GrayImage img;
    img.pixels = Matrix(params.height, params.width);
    for (std::size_t y = 0; y < params.height; ++y) {
        for (std::size_t x = 0; x < params.width; ++x) {
            const double xs = static_cast<double>(x) + params.dx;
            const double ys = static_cast<double>(y) + params.dy;
            double theta = params.global_angle;
            if (!field.empty()) {
                const long long by = std::clamp<long long>(
                    static_cast<long long>(ys) / kBlock, 0, static_cast<long long>(field.rows()) - 1);
                const long long bx = std::clamp<long long>(
                    static_cast<long long>(xs) / kBlock, 0, static_cast<long long>(field.cols()) - 1);
                theta = field.at(static_cast<std::size_t>(by), static_cast<std::size_t>(bx));
            }
            const double phase = params.ridge_frequency * (xs * std::cos(theta) + ys * std::sin(theta));
            double v = (std::sin(kTwoPi * phase) + 1.0) * 0.5 * 255.0;
            if (params.noise_sigma > 0.0) v += params.noise_sigma * normal(rng);
            img.pixels.at(y, x) = std::clamp(v, 0.0, 255.0);
        }
    }
    return img;
}

SynthParams corpus_sample_params(const CorpusParams& corpus, int finger_id, int sample_id) {
    SynthParams p;
    p.width = corpus.width;
    p.height = corpus.height;
    p.noise_sigma = corpus.noise_sigma;

    // the finger identity fixes the ridge frequency and orientation field
    std::mt19937_64 finger_rng(mix(corpus.seed, static_cast<std::uint64_t>(finger_id)));
    p.ridge_frequency = corpus.freq_lo + uniform01(finger_rng) * (corpus.freq_hi - corpus.freq_lo);
    const std::size_t brows = (corpus.height + kBlock - 1) / kBlock;
    const std::size_t bcols = (corpus.width + kBlock - 1) / kBlock;
    p.orientation_field = Matrix(brows, bcols);
    for (std::size_t r = 0; r < brows; ++r)
        for (std::size_t c = 0; c < bcols; ++c)
            p.orientation_field.at(r, c) = uniform01(finger_rng) * std::numbers::pi;

    // the sample index drives translation and the noise stream
    const std::uint64_t sample_seed =
        mix(mix(corpus.seed, static_cast<std::uint64_t>(finger_id)), static_cast<std::uint64_t>(sample_id));
    std::mt19937_64 sample_rng(sample_seed);
    p.dx = static_cast<int>(sample_rng() % (2 * kMaxShift + 1)) - kMaxShift;
    p.dy = static_cast<int>(sample_rng() % (2 * kMaxShift + 1)) - kMaxShift;
    p.seed = sample_seed;
    return p;
}

void generate_corpus(const std::filesystem::path& out_dir, int fingers, int samples,
                     const CorpusParams& corpus) {
    if (fingers < 1 || samples < 1) throw BadRange("generate_corpus: fingers and samples must be >= 1");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoFailure("cannot create " + out_dir.string() + ": " + ec.message());
    for (int f = corpus.first_finger; f < corpus.first_finger + fingers; ++f) {
        for (int s = 1; s <= samples; ++s) {
            const GrayImage img = render_fingerprint(corpus_sample_params(corpus, f, s));
            save_pgm(img, out_dir / (std::to_string(f) + "_" + std::to_string(s) + ".pgm"));
        }
    }
}

}  // namespace wavefp
