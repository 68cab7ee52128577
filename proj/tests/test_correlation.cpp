#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pgolay/correlation.hpp"
#include "pgolay/fixture.hpp"
#include "test_util.hpp"

using namespace pgolay;

TEST_CASE("paf basics") {
    CHECK(paf(BinarySequence::all_ones(5)).values == std::vector<int>{5, 5, 5, 5, 5});
    CHECK(paf(BinarySequence({-1, 1, 1, 1})).values == std::vector<int>{4, 0, 0, 0});
}

TEST_CASE("paf of the first published v=74 pair cancels at every nonzero shift") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    REQUIRE(!fixtures.empty());
    const VerifiedFixture fixture = verify_fixture(fixtures[0]);
    const PafVector pa = paf(fixture.pair.a());
    const PafVector pb = paf(fixture.pair.b());
    CHECK(pa.values[0] == 74);
    CHECK(pb.values[0] == 74);
    for (int s = 1; s < 74; ++s) {
        CHECK(pa.values[static_cast<std::size_t>(s)] + pb.values[static_cast<std::size_t>(s)] ==
              0);
    }
}

TEST_CASE("naf basics and length-2 Golay pairs") {
    CHECK(naf(BinarySequence({1, 1})).values == std::vector<int>{2, 1});

    // Exhaustive scan of all 16 length-2 pairs: the Golay ones (NAF sums
    // cancel) must include (++, +-) and every one must also be periodic.
    int golay_pairs = 0;
    bool found_reference = false;
    const int signs[2] = {1, -1};
    for (int a0 : signs)
        for (int a1 : signs)
            for (int b0 : signs)
                for (int b1 : signs) {
                    const BinarySequence a({a0, a1});
                    const BinarySequence b({b0, b1});
                    const bool golay = naf(a).values[1] + naf(b).values[1] == 0;
                    if (!golay) continue;
                    ++golay_pairs;
                    if (a0 == 1 && a1 == 1 && b0 == 1 && b1 == -1) found_reference = true;
                    CHECK(paf(a).values[1] + paf(b).values[1] == 0);
                }
    CHECK(found_reference);
    CHECK(golay_pairs == 8);
}

TEST_CASE("paf equals naf(s) + naf(v-s) on random sequences") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 225);
        const BinarySequence a = testutil::random_sequence(rng, v);
        const PafVector p = paf(a);
        const NafVector n = naf(a);
        CHECK(p.values[0] == v);
        CHECK(n.values[0] == v);
        for (int s = 1; s < v; ++s) {
            CHECK(p.values[static_cast<std::size_t>(s)] ==
                  n.values[static_cast<std::size_t>(s)] +
                      n.values[static_cast<std::size_t>(v - s)]);
        }
    }
}

TEST_CASE("paf symmetry and residue mod 4") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 120);
        const PafVector p = paf(testutil::random_sequence(rng, v));
        for (int s = 1; s < v; ++s) {
            CHECK(p.values[static_cast<std::size_t>(s)] ==
                  p.values[static_cast<std::size_t>(v - s)]);
            if (v % 2 == 0) {
                CHECK(((p.values[static_cast<std::size_t>(s)] - v) % 4 + 4) % 4 == 0);
            }
        }
    }
}

TEST_CASE("psd basics") {
    const std::vector<double> flat = psd(BinarySequence::all_ones(4));
    REQUIRE(flat.size() == 3);
    CHECK(flat[0] == doctest::Approx(16.0));
    CHECK(flat[1] <= 1e-9);
    CHECK(flat[2] <= 1e-9);
}

TEST_CASE("psd[0] is the squared entry sum") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 100);
        const BinarySequence a = testutil::random_sequence(rng, v);
        long long sum = 0;
        for (int i = 0; i < v; ++i) sum += a[i];
        CHECK(psd(a)[0] == doctest::Approx(static_cast<double>(sum * sum)).epsilon(1e-9));
    }
}

TEST_CASE("parseval over the mirrored spectrum") {
    std::mt19937 rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 150);
        const std::vector<double> p = psd(testutil::random_sequence(rng, v));
        double total = p[0];
        for (int k = 1; k <= (v - 1) / 2; ++k) {
            total += 2 * p[static_cast<std::size_t>(k)];
        }
        if (v % 2 == 0) {
            total += p[static_cast<std::size_t>(v / 2)];
        }
        CHECK(total == doctest::Approx(static_cast<double>(v) * v).epsilon(1e-9));
    }
}

TEST_CASE("psd is the cosine transform of the paf") {
    std::mt19937 rng(46);
    for (int trial = 0; trial < 60; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 225);
        const BinarySequence a = testutil::random_sequence(rng, v);
        const std::vector<double> p = psd(a);
        const PafVector pa = paf(a);
        for (int k = 0; k <= v / 2; ++k) {
            double expected = 0;
            for (int s = 0; s < v; ++s) {
                expected += pa.values[static_cast<std::size_t>(s)] *
                            std::cos(2.0 * std::numbers::pi * k * s / v);
            }
            CHECK(std::abs(p[static_cast<std::size_t>(k)] - expected) <= 1e-6 * v);
        }
    }
}

TEST_CASE("psd_test") {
    CHECK(psd_test(BinarySequence::all_ones(10)));

    // Alternating sequence concentrates all energy at k = v/2.
    std::vector<int> alternating(8);
    for (int i = 0; i < 8; ++i) alternating[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : -1;
    const BinarySequence alt(std::move(alternating));
    CHECK(psd(alt)[4] == doctest::Approx(64.0));
    CHECK_FALSE(psd_test(alt));
}

TEST_CASE("both sequences of every published fixture pass the psd test") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    REQUIRE(fixtures.size() == 11);
    for (const FixtureSpec& spec : fixtures) {
        const VerifiedFixture fixture = verify_fixture(spec);
        CHECK(psd_test(fixture.pair.a()));
        CHECK(psd_test(fixture.pair.b()));
    }
}

TEST_CASE("verified pair spectra sum to 2v at every nonzero frequency") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    const VerifiedFixture fixture = verify_fixture(fixtures[0]);
    const std::vector<double> pa = psd(fixture.pair.a());
    const std::vector<double> pb = psd(fixture.pair.b());
    const int v = fixture.pair.length();
    for (std::size_t k = 1; k < pa.size(); ++k) {
        CHECK(std::abs(pa[k] + pb[k] - 2.0 * v) <= 1e-6 * v);
    }

    const PeriodicGolayPair small = verify_periodic_golay_pair(SubsetZv(4, {0}), SubsetZv(4, {0}));
    const std::vector<double> sa = psd(small.a());
    const std::vector<double> sb = psd(small.b());
    for (std::size_t k = 1; k < sa.size(); ++k) {
        CHECK(std::abs(sa[k] + sb[k] - 8.0) <= 1e-6 * 4);
    }
}
