#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "wavefp/errors.hpp"
#include "wavefp/matcher.hpp"

using namespace wavefp;

namespace {

Template make_template(int finger, int sample, std::vector<double> features,
                       const std::string& hash) {
    Template t;
    t.finger_id = finger;
    t.sample_id = sample;
    t.features = std::move(features);
    t.config_hash = hash;
    return t;
}

TemplateStore toy_store(const std::string& hash) {
    TemplateStore store;
    store.config_hash = hash;
    return store;
}

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::vector<double> v(n);
    for (double& x : v) x = (testing::uniform01(rng) - 0.5) * 20.0;
    return v;
}

}  // namespace

TEST_CASE("euclidean hand cases and errors") {
    const std::vector<double> a{0.0, 0.0}, b{3.0, 4.0};
    CHECK(euclidean(a, a) == 0.0);
    CHECK(euclidean(a, b) == doctest::Approx(5.0).epsilon(1e-12));
    const std::vector<double> c{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(euclidean(a, c), LengthMismatch);
}

TEST_CASE("euclidean matches the naive loop on random 96-dim pairs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> a = random_vector(96, rng), b = random_vector(96, rng);
        CHECK(std::abs(euclidean(a, b) - oracles::naive_euclidean(a, b)) < 1e-12);
    }
}

TEST_CASE("metric axioms on 200 random triples") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<double> a = random_vector(96, rng), b = random_vector(96, rng),
                                  c = random_vector(96, rng);
        const double ab = euclidean(a, b), ba = euclidean(b, a);
        const double ac = euclidean(a, c), bc = euclidean(b, c);
        CHECK(ab == ba);                       // symmetry
        CHECK(ab >= 0.0);                      // non-negativity
        CHECK(euclidean(a, a) == 0.0);         // identity
        CHECK(ac <= ab + bc + 1e-9);           // triangle inequality
    }
}

TEST_CASE("verify: identity, threshold rule, tie-break, brute-force minimum") {
    const std::string hash = "deadbeef";
    TemplateStore store = toy_store(hash);
    std::mt19937_64 rng(14);
    std::vector<std::vector<double>> enrolled_features;
    for (int s = 1; s <= 7; ++s) {
        auto f = random_vector(8, rng);
        enrolled_features.push_back(f);
        store.insert(make_template(42, s, f, hash));
    }

    SUBCASE("identical probe matches at distance 0") {
        const Template probe = make_template(42, 8, enrolled_features[2], hash);
        const MatchDecision d = verify(probe, 42, store, 10.0);
        CHECK(d.distance == 0.0);
        CHECK(d.matched);
        CHECK(d.best_sample_id == 3);
    }
    SUBCASE("threshold below the minimum distance rejects") {
        Template probe = make_template(42, 8, enrolled_features[0], hash);
        for (double& v : probe.features) v += 1.0;  // distance sqrt(8) from sample 1
        const MatchDecision d = verify(probe, 42, store, 0.5);
        CHECK(!d.matched);
        CHECK(d.distance > 0.5);
    }
    SUBCASE("distance equals the brute-force minimum of the 7 pairwise distances") {
        const Template probe = make_template(42, 8, random_vector(8, rng), hash);
        const MatchDecision d = verify(probe, 42, store, 1.0);
        double want = std::numeric_limits<double>::infinity();
        for (const auto& f : enrolled_features)
            want = std::min(want, oracles::naive_euclidean(probe.features, f));
        CHECK(d.distance == doctest::Approx(want).epsilon(1e-12));
    }
    SUBCASE("exact tie breaks to the lowest sample id") {
        TemplateStore tied = toy_store(hash);
        const std::vector<double> f{1.0, 2.0};
        tied.insert(make_template(7, 5, f, hash));
        tied.insert(make_template(7, 2, f, hash));
        const Template probe = make_template(7, 8, std::vector<double>{1.0, 3.0}, hash);
        CHECK(verify(probe, 7, tied, 10.0).best_sample_id == 2);
    }
    SUBCASE("matched is monotone in the threshold") {
        const Template probe = make_template(42, 8, random_vector(8, rng), hash);
        const double d = verify(probe, 42, store, 0.0).distance;
        CHECK(!verify(probe, 42, store, d - 1e-9).matched);
        CHECK(verify(probe, 42, store, d).matched);  // boundary: <= rule
        CHECK(verify(probe, 42, store, d + 1.0).matched);
    }
    SUBCASE("enrollment order does not change the distance") {
        TemplateStore reversed = toy_store(hash);
        for (int s = 7; s >= 1; --s)
            reversed.insert(make_template(42, s, enrolled_features[s - 1], hash));
        const Template probe = make_template(42, 8, random_vector(8, rng), hash);
        CHECK(verify(probe, 42, store, 1.0).distance == verify(probe, 42, reversed, 1.0).distance);
    }
    SUBCASE("unknown finger") {
        const Template probe = make_template(9999, 1, random_vector(8, rng), hash);
        CHECK_THROWS_AS(verify(probe, 9999, store, 1.0), UnknownFinger);
    }
    SUBCASE("config mismatch") {
        const Template probe = make_template(42, 1, random_vector(8, rng), "0123456789abcdef");
        CHECK_THROWS_AS(verify(probe, 42, store, 1.0), ConfigMismatch);
    }
}

TEST_CASE("aggregation rules: min, mean, median") {
    const std::string hash = "h";
    TemplateStore store = toy_store(hash);
    store.insert(make_template(1, 1, {0.0}, hash));
    store.insert(make_template(1, 2, {2.0}, hash));
    store.insert(make_template(1, 3, {7.0}, hash));
    const Template probe = make_template(1, 8, std::vector<double>{0.0}, hash);

    CHECK(verify(probe, 1, store, 100.0, Aggregation::min).distance == 0.0);
    CHECK(verify(probe, 1, store, 100.0, Aggregation::mean).distance ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(verify(probe, 1, store, 100.0, Aggregation::median).distance ==
          doctest::Approx(2.0).epsilon(1e-12));

    store.insert(make_template(1, 4, {3.0}, hash));  // even count: median averages
    CHECK(verify(probe, 1, store, 100.0, Aggregation::median).distance ==
          doctest::Approx(2.5).epsilon(1e-12));

    CHECK(aggregation_from_string("median") == Aggregation::median);
    CHECK_THROWS_AS(aggregation_from_string("max"), InvalidConfig);
}

TEST_CASE("identify ranks fingers by distance with deterministic ties") {
    const std::string hash = "h";
    TemplateStore store = toy_store(hash);
    store.insert(make_template(1, 1, {0.0, 0.0}, hash));
    store.insert(make_template(2, 1, {3.0, 4.0}, hash));
    store.insert(make_template(3, 1, {1.0, 0.0}, hash));

    const Template probe = make_template(99, 1, std::vector<double>{0.0, 0.0}, hash);
    const auto ranked = identify(probe, store, 2.0);
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].finger_id == 1);
    CHECK(ranked[0].distance == 0.0);
    CHECK(ranked[0].matched);
    CHECK(ranked[1].finger_id == 3);
    CHECK(ranked[1].matched);  // distance 1 <= 2
    CHECK(ranked[2].finger_id == 2);
    CHECK(!ranked[2].matched);  // distance 5

    SUBCASE("threshold 0 with no exact duplicate flags nothing") {
        const Template off = make_template(99, 1, std::vector<double>{0.5, 0.0}, hash);
        for (const auto& e : identify(off, store, 0.0)) CHECK(!e.matched);
    }
    SUBCASE("ordering equals a brute-force sort on random stores") {
        std::mt19937_64 rng(15);
        TemplateStore big = toy_store(hash);
        for (int finger = 1; finger <= 9; ++finger)
            for (int s = 1; s <= 3; ++s)
                big.insert(make_template(finger, s, random_vector(4, rng), hash));
        const Template p = make_template(0, 1, random_vector(4, rng), hash);
        const auto got = identify(p, big, 1.0);

        std::vector<std::pair<double, int>> want;
        for (const auto& [finger, ts] : big.by_finger) {
            double dmin = std::numeric_limits<double>::infinity();
            for (const Template& t : ts)
                dmin = std::min(dmin, oracles::naive_euclidean(p.features, t.features));
            want.push_back({dmin, finger});
        }
        std::sort(want.begin(), want.end());
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].finger_id == want[i].second);
    }
    SUBCASE("empty store") {
        const TemplateStore empty = toy_store(hash);
        CHECK_THROWS_AS(identify(probe, empty, 1.0), EmptyDataset);
    }
}

TEST_CASE("z-scored distance uses the store statistics") {
    const std::string hash = "h";
    TemplateStore store = toy_store(hash);
    store.insert(make_template(1, 1, {0.0, 0.0}, hash));
    store.norm_mean = std::vector<double>{0.0, 0.0};
    store.norm_std = std::vector<double>{2.0, 0.0};  // second dimension is dead

    const Template probe = make_template(1, 8, std::vector<double>{4.0, 123.0}, hash);
    // (4-0)/2 = 2 on dim 1, dim 2 drops out
    CHECK(verify(probe, 1, store, 10.0).distance == doctest::Approx(2.0).epsilon(1e-12));
}
