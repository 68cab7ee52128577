#include <doctest.h>

#include <map>
#include <sstream>

#include "pgolay/fixture.hpp"
#include "test_util.hpp"

using namespace pgolay;

TEST_CASE("the bundled fixture file parses into eleven specs") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    REQUIRE(fixtures.size() == 11);
    std::map<int, int> per_length;
    for (const FixtureSpec& spec : fixtures) {
        ++per_length[spec.v];
    }
    CHECK(per_length == std::map<int, int>{{74, 2}, {82, 2}, {122, 1}, {164, 3}, {202, 1},
                                           {226, 2}});
    CHECK(fixtures[0].r == 36);
    CHECK(fixtures[0].s == 31);
    CHECK(fixtures[0].lambda == 30);
    CHECK(fixtures[8].v == 202);
    CHECK(fixtures[8].k_reps.back() == 101);
}

TEST_CASE("every bundled fixture verifies") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    for (const FixtureSpec& spec : fixtures) {
        const VerifiedFixture fixture = verify_fixture(spec);
        CHECK(fixture.params.lambda == spec.lambda);
        CHECK(fixture.x.size() == spec.r);
        CHECK(fixture.y.size() == spec.s);
    }
}

TEST_CASE("parse, serialize, parse is the identity") {
    const auto fixtures = parse_fixtures_file(testutil::data_path("fixtures/published_pairs.txt"));
    std::string document;
    for (const FixtureSpec& spec : fixtures) {
        document += serialize_fixture(spec) + "\n";
    }
    std::istringstream in(document);
    auto reparsed = parse_fixtures(in);
    REQUIRE(reparsed.size() == fixtures.size());
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        FixtureSpec expected = fixtures[i];
        expected.line = reparsed[i].line;  // line numbers differ between documents
        CHECK(reparsed[i] == expected);
    }
}

TEST_CASE("empty document yields no fixtures") {
    std::istringstream in("# only a comment\n\n");
    CHECK(parse_fixtures(in).empty());
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad_tag("pear v=4 H=1 J=0 K=0 params=1,1,0\n");
    try {
        parse_fixtures(bad_tag);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    std::istringstream missing("\npair v=4 H=1 J=0 params=1,1,0\n");
    try {
        parse_fixtures(missing);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("'K'") != std::string::npos);
    }
    std::istringstream bad_params("pair v=4 H=1 J=0 K=0 params=1,1\n");
    CHECK_THROWS_AS(parse_fixtures(bad_params), Error);
}

TEST_CASE("mutated fixtures fail with the right errors") {
    // Swapping the rep 42 for the fixed point 37 shrinks the block: ParamMismatch.
    std::istringstream wrong_size(
        "pair v=74 H=1,47,63 J=1,4,6,7,9,12,22,23,28,29,34,37 "
        "K=1,2,4,6,9,12,17,21,22,37,55 params=36,31,30\n");
    try {
        verify_fixture(parse_fixtures(wrong_size).at(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::param_mismatch);
    }

    // 8 is not the smallest element of its orbit.
    std::istringstream bad_rep(
        "pair v=74 H=1,47,63 J=1,4,6,7,9,12,22,23,28,29,34,8 "
        "K=1,2,4,6,9,12,17,21,22,37,55 params=36,31,30\n");
    try {
        verify_fixture(parse_fixtures(bad_rep).at(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_representative);
    }

    // Replacing 42 by 36 keeps the sizes but breaks complementarity.
    std::istringstream wrong_pair(
        "pair v=74 H=1,47,63 J=1,4,6,7,9,12,22,23,28,29,34,36 "
        "K=1,2,4,6,9,12,17,21,22,37,55 params=36,31,30\n");
    try {
        verify_fixture(parse_fixtures(wrong_pair).at(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_complementary);
    }

    // Duplicate representative.
    std::istringstream dup(
        "pair v=74 H=1,47,63 J=1,1,6,7,9,12,22,23,28,29,34,42 "
        "K=1,2,4,6,9,12,17,21,22,37,55 params=36,31,30\n");
    try {
        verify_fixture(parse_fixtures(dup).at(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::duplicate_index);
    }
}

TEST_CASE("fixture_from_solution round trips through the parser") {
    SolutionRecord solution;
    solution.v = 4;
    solution.h_elements = {1};
    solution.j_reps = {0};
    solution.k_reps = {0};
    solution.r = 1;
    solution.s = 1;
    solution.lambda = 0;
    const std::string line = serialize_fixture(fixture_from_solution(solution));
    CHECK(line == "pair v=4 H=1 J=0 K=0 params=1,1,0");
    std::istringstream in(line);
    const auto parsed = parse_fixtures(in);
    REQUIRE(parsed.size() == 1);
    CHECK_NOTHROW(verify_fixture(parsed[0]));
}

TEST_CASE("plan files parse with every optional key") {
    std::istringstream in(
        "# comment\n"
        "v=74\n"
        "H=47\n"
        "r=36\n"
        "s=31\n"
        "forced_y=37\n"
        "excluded_y=0\n"
        "window_x_from=1,2\n"
        "window_x_to=1,5\n"
        "psd_slack=0.5\n"
        "translate_x=true\n");
    const SearchPlan plan = parse_plan(in);
    CHECK(plan.v == 74);
    CHECK(plan.h_generators == std::vector<int>{47});
    CHECK(plan.r == 36);
    CHECK(plan.s == 31);
    CHECK(plan.forced_y == std::vector<int>{37});
    CHECK(plan.excluded_y == std::vector<int>{0});
    REQUIRE(plan.window_x.from.has_value());
    CHECK(*plan.window_x.from == std::vector<int>{1, 2});
    CHECK(*plan.window_x.to == std::vector<int>{1, 5});
    CHECK_FALSE(plan.window_y.from.has_value());
    CHECK(plan.psd_slack == doctest::Approx(0.5));
    CHECK(plan.translate_x);
    CHECK(plan.lambda() == 30);
}

TEST_CASE("bad plan files list the offending fields") {
    std::istringstream in("v=74\nH=47\nr=36\nbogus=1\nwhat=2\n");
    try {
        parse_plan(in);
        CHECK(false);
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(e.code() == errc::parse_error);
        CHECK(what.find("bogus") != std::string::npos);
        CHECK(what.find("what") != std::string::npos);
        CHECK(what.find("'s'") != std::string::npos);  // missing required key
    }
    std::istringstream dup("v=74\nv=74\nH=47\nr=36\ns=31\n");
    CHECK_THROWS_AS(parse_plan(dup), Error);
    std::istringstream bad_bool("v=74\nH=47\nr=36\ns=31\ntranslate_x=maybe\n");
    CHECK_THROWS_AS(parse_plan(bad_bool), Error);
}

TEST_CASE("the bundled plans parse") {
    for (const char* name :
         {"plans/v4_exhaustive.plan", "plans/v10_exhaustive.plan", "plans/v34_exhaustive.plan",
          "plans/v74_seeded.plan", "plans/v74_full.plan", "plans/v82_full.plan",
          "plans/v122_full.plan"}) {
        CHECK_NOTHROW(parse_plan_file(testutil::data_path(name)));
    }
}
