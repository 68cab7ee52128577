#include <doctest.h>

#include <vector>

#include "pgolay/conditions.hpp"
#include "pgolay/error.hpp"
#include "test_util.hpp"

using namespace pgolay;

namespace {

const std::vector<int> excluded_list = {18, 36, 98, 162, 242, 324, 392, 484, 490};
const std::vector<int> constructed_lengths = {74, 82, 122, 164, 202, 226};
const std::vector<int> open_300 = {90,  106, 130, 146, 170, 178, 180, 194,
                                   212, 218, 234, 250, 274, 290, 292, 298};

}  // namespace

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(74) == std::vector<std::pair<long long, int>>{{2, 1}, {37, 1}});
    CHECK(factorize(324) == std::vector<std::pair<long long, int>>{{2, 2}, {3, 4}});
}

TEST_CASE("two squares examples") {
    CHECK(is_sum_of_two_squares(74));  // 49 + 25
    CHECK_FALSE(is_sum_of_two_squares(6));
    CHECK(is_sum_of_two_squares(1));  // 1 + 0
}

TEST_CASE("two squares agrees with brute force up to 10000") {
    for (long long v = 1; v <= 10000; ++v) {
        CHECK(is_sum_of_two_squares(v) == testutil::sum_of_two_squares_brute(v));
    }
}

TEST_CASE("eks exclusion") {
    CHECK(eks_golay_exclusion(18));  // factor 3
    CHECK_FALSE(eks_golay_exclusion(74));
    CHECK_FALSE(eks_golay_exclusion(1));
}

TEST_CASE("arasu-xiang examples") {
    CHECK_FALSE(arasu_xiang_test(36));  // 3^2 * 4: u = 4 < 6
    CHECK(arasu_xiang_test(90));        // 3^2 * 10: u = 10 >= 6
    CHECK(arasu_xiang_test(74));        // vacuous, no prime = 3 mod 4
    try {
        arasu_xiang_test(6);  // 3^1: odd exponent belongs to the two-squares filter
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::odd_exponent);
    }
}

TEST_CASE("the excluded list fails arasu-xiang while even and two-squares") {
    for (int v : excluded_list) {
        CHECK(v % 2 == 0);
        CHECK(is_sum_of_two_squares(v));
        CHECK_FALSE(arasu_xiang_test(v));
        CHECK(classify_length(v).known_status == KnownStatus::excluded);
    }
}

TEST_CASE("196 also fails arasu-xiang") {
    // 196 = 2^2 * 7^2 has u = 4 < 2 * 7; it is even and a sum of two squares,
    // so it is excluded by the same bound as the nine listed lengths.
    CHECK(is_sum_of_two_squares(196));
    CHECK_FALSE(arasu_xiang_test(196));
    CHECK(classify_length(196).known_status == KnownStatus::excluded);
}

TEST_CASE("constructed lengths pass all three necessary conditions") {
    for (int v : constructed_lengths) {
        const LengthVerdict verdict = classify_length(v);
        CHECK(verdict.even);
        CHECK(verdict.two_squares);
        CHECK(verdict.arasu_xiang_pass);
        CHECK(verdict.known_status == KnownStatus::periodic_only);
    }
}

TEST_CASE("golay number form") {
    CHECK(is_golay_number_form(1));
    CHECK(is_golay_number_form(40));    // 2^2 * 10
    CHECK(is_golay_number_form(104));   // 2^2 * 26
    CHECK(is_golay_number_form(260));   // 10 * 26
    CHECK_FALSE(is_golay_number_form(5));   // alpha would be negative
    CHECK_FALSE(is_golay_number_form(74));
    CHECK_FALSE(is_golay_number_form(130));  // needs 2^-1
}

TEST_CASE("known periodic closure includes products with Golay numbers") {
    CHECK(is_known_periodic_golay(34));
    CHECK(is_known_periodic_golay(116));  // 2 * 58
    CHECK(is_known_periodic_golay(148));  // 2 * 74
    CHECK(is_known_periodic_golay(296));  // 4 * 74
    CHECK_FALSE(is_known_periodic_golay(90));
    CHECK_FALSE(is_known_periodic_golay(40));  // Golay form, not in this set
}

TEST_CASE("classify_length statuses") {
    CHECK(classify_length(34).known_status == KnownStatus::periodic_only);
    CHECK(classify_length(40).known_status == KnownStatus::golay);
    CHECK(classify_length(18).known_status == KnownStatus::excluded);
    CHECK(classify_length(1).known_status == KnownStatus::golay);  // 2^0 10^0 26^0
    CHECK(classify_length(90).known_status == KnownStatus::open);
    CHECK(classify_length(9).known_status == KnownStatus::excluded);  // odd
    const LengthVerdict v18 = classify_length(18);
    CHECK(v18.even);
    CHECK(v18.two_squares);
    CHECK_FALSE(v18.eks_golay_possible);
    CHECK_FALSE(v18.arasu_xiang_pass);
}

TEST_CASE("excluded status implies a failed necessary condition") {
    for (int v = 1; v <= 500; ++v) {
        const LengthVerdict verdict = classify_length(v);
        if (verdict.known_status == KnownStatus::excluded) {
            CHECK((!verdict.even || !verdict.two_squares || !verdict.arasu_xiang_pass));
        }
    }
}

TEST_CASE("open candidates to 300 reproduce the sixteen open lengths") {
    CHECK(open_candidates(300) == open_300);
}

TEST_CASE("open candidates small ranges") {
    CHECK(open_candidates(10).empty());  // 2, 4, 8, 10 are Golay numbers
    CHECK(open_candidates(1).empty());
    CHECK(open_candidates(90) == std::vector<int>{90});
}

TEST_CASE("range guards") {
    CHECK_THROWS_AS(classify_length(0), Error);
    CHECK_THROWS_AS(factorize(2000000), Error);
}
