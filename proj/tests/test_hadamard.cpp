#include <doctest.h>

#include <sstream>

#include "pgolay/correlation.hpp"
#include "pgolay/fixture.hpp"
#include "pgolay/hadamard.hpp"
#include "test_util.hpp"

using namespace pgolay;

TEST_CASE("circulant basics") {
    const SquareMatrix c = circulant(BinarySequence({1, -1}));
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(0, 1) == -1);
    CHECK(c.at(1, 0) == -1);
    CHECK(c.at(1, 1) == 1);

    const BinarySequence a({1, -1, -1, 1, 1});
    const SquareMatrix m = circulant(a);
    for (int j = 0; j < 5; ++j) {
        CHECK(m.at(0, j) == a[j]);  // row 0 is the sequence itself
    }
    CHECK(m.at(1, 0) == a[4]);  // each row is the right-shift of the previous
}

TEST_CASE("circulant gram matrix row matches the paf") {
    const BinarySequence a({1, -1, 1, 1, -1, -1, 1});
    const SquareMatrix c = circulant(a);
    const PafVector p = paf(a);
    const int v = a.length();
    for (int s = 0; s < v; ++s) {
        int dot = 0;
        for (int k = 0; k < v; ++k) {
            dot += c.at(0, k) * c.at(s, k);
        }
        CHECK(dot == p.values[static_cast<std::size_t>(s)]);
    }
}

TEST_CASE("is_hadamard") {
    CHECK(is_hadamard(SquareMatrix(2, {1, 1, -1, 1})));
    CHECK_FALSE(is_hadamard(SquareMatrix(2, {1, 1, 1, 1})));
}

TEST_CASE("build_hadamard at v=1") {
    const PeriodicGolayPair pair = verify_periodic_golay_pair(SubsetZv(1, {}), SubsetZv(1, {}));
    const SquareMatrix m = build_hadamard(pair);
    CHECK(m.order() == 2);
    CHECK(m.entries() == std::vector<int>{1, 1, -1, 1});
    CHECK(is_hadamard(m));
}

TEST_CASE("build_hadamard at v=4") {
    const PeriodicGolayPair pair = verify_periodic_golay_pair(SubsetZv(4, {0}), SubsetZv(4, {0}));
    const SquareMatrix m = build_hadamard(pair);
    CHECK(m.order() == 8);
    CHECK(is_hadamard(m));
}

TEST_CASE("circulant identity for the first published pair") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    const VerifiedFixture fixture = verify_fixture(fixtures[0]);
    const SquareMatrix ca = circulant(fixture.pair.a());
    const SquareMatrix cb = circulant(fixture.pair.b());
    const int v = fixture.pair.length();
    // C_A C_A^t + C_B C_B^t = 2v I, checked entrywise.
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            long long dot = 0;
            for (int k = 0; k < v; ++k) {
                dot += static_cast<long long>(ca.at(i, k)) * ca.at(j, k) +
                       static_cast<long long>(cb.at(i, k)) * cb.at(j, k);
            }
            CHECK(dot == (i == j ? 2LL * v : 0LL));
        }
    }
    const SquareMatrix m = build_hadamard(fixture.pair);
    CHECK(m.order() == 148);
    CHECK(is_hadamard(m));
}

TEST_CASE("matrix text round trip") {
    const PeriodicGolayPair pair = verify_periodic_golay_pair(SubsetZv(4, {0}), SubsetZv(4, {0}));
    const SquareMatrix m = build_hadamard(pair);
    std::stringstream pm;
    write_matrix_pm(pm, m);
    CHECK(read_matrix_pm(pm) == m);

    std::stringstream csv;
    write_matrix_csv(csv, m);
    std::string first_line;
    std::getline(csv, first_line);
    CHECK(first_line == "-1,1,1,1,-1,1,1,1");
}

TEST_CASE("matrix parse errors") {
    std::stringstream ragged("++\n+\n");
    CHECK_THROWS_AS(read_matrix_pm(ragged), Error);
    std::stringstream junk("+x\n--\n");
    CHECK_THROWS_AS(read_matrix_pm(junk), Error);
    std::stringstream not_square("++\n");
    CHECK_THROWS_AS(read_matrix_pm(not_square), Error);
}
