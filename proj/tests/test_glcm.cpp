#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "wavefp/errors.hpp"
#include "wavefp/glcm.hpp"

using namespace wavefp;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix q;
    q.rows = rows.size();
    q.cols = rows.begin()->size();
    for (const auto& row : rows)
        for (int v : row) q.values.push_back(v);
    return q;
}

IntMatrix random_quantized(std::size_t rows, std::size_t cols, int levels, std::mt19937_64& rng) {
    IntMatrix q;
    q.rows = rows;
    q.cols = cols;
    q.values.resize(rows * cols);
    for (int& v : q.values) v = static_cast<int>(rng() % levels);
    return q;
}

}  // namespace

TEST_CASE("quantize endpoints, midpoint and range errors") {
    SUBCASE("lo and hi land in the extreme bins") {
        const Matrix m = Matrix::from_rows({{2.0, 10.0}});
        const IntMatrix q = quantize(m, 8, 2.0, 10.0);
        CHECK(q.at(0, 0) == 0);
        CHECK(q.at(0, 1) == 7);
    }
    SUBCASE("midpoint with L=2 falls in the upper bin") {
        const Matrix m = Matrix::from_rows({{5.0}});
        CHECK(quantize(m, 2, 0.0, 10.0).at(0, 0) == 1);
    }
    SUBCASE("values outside the range clamp") {
        const Matrix m = Matrix::from_rows({{-3.0, 42.0}});
        const IntMatrix q = quantize(m, 4, 0.0, 10.0);
        CHECK(q.at(0, 0) == 0);
        CHECK(q.at(0, 1) == 3);
    }
    SUBCASE("bad ranges") {
        const Matrix m(1, 1, 0.0);
        CHECK_THROWS_AS(quantize(m, 8, 1.0, 1.0), BadRange);
        CHECK_THROWS_AS(quantize(m, 8, 2.0, 1.0), BadRange);
        CHECK_THROWS_AS(quantize(m, 1, 0.0, 1.0), BadRange);
    }
}

TEST_CASE("quantize matches the per-element oracle on random input") {
    std::mt19937_64 rng(5);
    const Matrix m = testing::random_matrix(12, 9, rng, -4.0, 4.0);
    const IntMatrix q = quantize(m, 8, -4.0, 4.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            CHECK(q.at(r, c) >= 0);
            CHECK(q.at(r, c) <= 7);
            CHECK(q.at(r, c) == oracles::brute_quantize_value(m.at(r, c), 8, -4.0, 4.0));
        }
    }
}

TEST_CASE("glcm of the 2x2 worked example") {
    const IntMatrix q = int_matrix({{0, 0}, {0, 1}});
    const Glcm g = glcm(q, 2, 0, 1, /*symmetric=*/false);
    // two horizontal pairs: top row gives (0,0), bottom row gives (0,1)
    CHECK(g.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(g.at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(g.at(1, 0) == 0.0);
    CHECK(g.at(1, 1) == 0.0);

    const TextureFeatures f = features(g);
    CHECK(f.contrast == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.energy == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.homogeneity == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("constant input: single cell, NaN correlation, unit energy") {
    const IntMatrix q = int_matrix({{3, 3, 3}, {3, 3, 3}});
    const Glcm g = glcm(q, 8, 0, 1, true);
    CHECK(g.at(3, 3) == doctest::Approx(1.0).epsilon(1e-12));

    const TextureFeatures f = features(g);
    CHECK(f.contrast == 0.0);
    CHECK(f.energy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.homogeneity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isnan(f.correlation));
}

TEST_CASE("checkerboard is perfectly anti-correlated") {
    IntMatrix q;
    q.rows = q.cols = 6;
    q.values.resize(36);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) q.values[r * 6 + c] = static_cast<int>((r + c) % 2);
    const TextureFeatures f = features(glcm(q, 2, 0, 1, true));
    CHECK(f.correlation == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("NoPairs when the plane cannot host the offset") {
    const IntMatrix one = int_matrix({{0}});
    CHECK_THROWS_AS(glcm(one, 2, 0, 1, false), NoPairs);
    const IntMatrix col = int_matrix({{0}, {1}, {0}});
    CHECK_THROWS_AS(glcm(col, 2, 0, 1, false), NoPairs);  // no horizontal pairs in a 1-wide plane
    CHECK(has_offset_pairs(3, 1, 1, 0));
    CHECK(!has_offset_pairs(3, 1, 0, 1));
}

TEST_CASE("glcm input validation") {
    const IntMatrix q = int_matrix({{0, 5}});
    CHECK_THROWS_AS(glcm(q, 4, 0, 1, false), BadRange);   // value 5 outside [0,4)
    CHECK_THROWS_AS(glcm(q, 8, 0, 0, false), BadRange);   // zero offset
}

TEST_CASE("features match the brute-force pair enumeration on 50 random 6x6 inputs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const int levels = 2 + static_cast<int>(rng() % 7);
        const int dy = static_cast<int>(rng() % 3) - 1;
        int dx = static_cast<int>(rng() % 3) - 1;
        if (dy == 0 && dx == 0) dx = 1;
        const bool symmetric = (rng() % 2) == 0;
        const IntMatrix q = random_quantized(6, 6, levels, rng);

        const TextureFeatures got = features(glcm(q, levels, dy, dx, symmetric));
        const TextureFeatures want = oracles::brute_texture_features(q, levels, dy, dx, symmetric);
        CAPTURE(trial);
        CHECK(std::abs(got.contrast - want.contrast) < 1e-12);
        CHECK(std::abs(got.energy - want.energy) < 1e-12);
        CHECK(std::abs(got.homogeneity - want.homogeneity) < 1e-12);
        if (std::isnan(want.correlation))
            CHECK(std::isnan(got.correlation));
        else
            CHECK(std::abs(got.correlation - want.correlation) < 1e-12);
    }
}

TEST_CASE("probabilities sum to one whenever pairs exist") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 2 + rng() % 8, cols = 2 + rng() % 8;
        const IntMatrix q = random_quantized(rows, cols, 8, rng);
        const Glcm g = glcm(q, 8, 0, 1, (rng() % 2) == 0);
        double sum = 0.0;
        for (double v : g.p) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("symmetric GLCM commutes with transposition") {
    std::mt19937_64 rng(31);
    const IntMatrix q = random_quantized(7, 5, 4, rng);
    IntMatrix qt;
    qt.rows = q.cols;
    qt.cols = q.rows;
    qt.values.resize(q.values.size());
    for (std::size_t r = 0; r < q.rows; ++r)
        for (std::size_t c = 0; c < q.cols; ++c) qt.at(c, r) = q.at(r, c);

    const Glcm a = glcm(q, 4, 1, 2, true);
    const Glcm b = glcm(qt, 4, 2, 1, true);  // transposed offset
    for (std::size_t i = 0; i < a.p.size(); ++i) CHECK(a.p[i] == doctest::Approx(b.p[i]).epsilon(1e-12));
}

TEST_CASE("energy is 1 exactly when one cell carries all mass") {
    const IntMatrix concentrated = int_matrix({{1, 1}, {1, 1}});
    CHECK(features(glcm(concentrated, 4, 0, 1, true)).energy == doctest::Approx(1.0).epsilon(1e-12));

    const IntMatrix spread = int_matrix({{0, 1}, {2, 3}});
    CHECK(features(glcm(spread, 4, 0, 1, true)).energy < 1.0);
}

TEST_CASE("features_of_plane degenerate fallbacks") {
    GlcmConfig cfg;
    SUBCASE("constant range quantizes to constant texture") {
        const Matrix m(4, 4, 3.0);
        const TextureFeatures f = features_of_plane(m, 3.0, 3.0, cfg);
        CHECK(std::isnan(f.correlation));
        CHECK(f.contrast == 0.0);
        CHECK(f.energy == 1.0);
        CHECK(f.homogeneity == 1.0);
    }
    SUBCASE("plane too small for the offset degrades to constant texture") {
        const Matrix m(1, 1, 0.5);
        const TextureFeatures f = features_of_plane(m, 0.0, 1.0, cfg);
        CHECK(std::isnan(f.correlation));
        CHECK(f.energy == 1.0);
    }
    SUBCASE("lo > hi is an error") {
        CHECK_THROWS_AS(features_of_plane(Matrix(2, 2, 0.0), 1.0, 0.0, cfg), BadRange);
    }
}
