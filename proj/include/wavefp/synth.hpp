#pragma once

#include <cstdint>
#include <filesystem>

#include "wavefp/image.hpp"
#include "wavefp/matrix.hpp"

namespace wavefp {

// One synthetic ridge image: a sinusoidal ridge pattern with block-wise
// constant orientation, plus seeded Gaussian noise and a small translation.
// Output is deterministic in (params, seed) across platforms.
struct SynthParams {
    std::size_t width = 160;
    std::size_t height = 160;
    double ridge_frequency = 0.12;  // cycles/pixel, in (0, 0.5)
    Matrix orientation_field;       // one angle per 8x8 block; empty = use global_angle
    double global_angle = 0.0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    int dx = 0, dy = 0;  // translation in pixels
};

GrayImage render_fingerprint(const SynthParams& params);

// A corpus of `fingers` x `samples` PGM files named <finger>_<sample>.pgm.
// Every finger gets its own ridge frequency and random 8x8-block orientation
// field; samples of one finger differ by seeded noise and a translation of
// at most 3 pixels.
struct CorpusParams {
    std::size_t width = 160;
    std::size_t height = 160;
    double freq_lo = 0.08;  // per-finger ridge frequency range, cycles/pixel
    double freq_hi = 0.20;
    double noise_sigma = 6.0;
    std::uint64_t seed = 1;
    int first_finger = 1;
};

// Deterministic per-sample parameters, exposed so callers can regenerate any
// single image of a corpus.
SynthParams corpus_sample_params(const CorpusParams& corpus, int finger_id, int sample_id);

void generate_corpus(const std::filesystem::path& out_dir, int fingers, int samples,
                     const CorpusParams& corpus);

}  // namespace wavefp
