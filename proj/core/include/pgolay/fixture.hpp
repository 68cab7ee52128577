#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pgolay/core.hpp"
#include "pgolay/orbits.hpp"
#include "pgolay/search.hpp"

namespace pgolay {

/// One solution in the line-oriented fixture format:
///   pair v=<int> H=<h1>,<h2>,... J=<j1>,... K=<k1>,... params=<r>,<s>,<lambda>
/// '#' starts a comment; blank lines are skipped. H may be given either as
/// the full subgroup or any generating set; the closure is what counts.
struct FixtureSpec {
    int v = 0;
    std::vector<int> h_values;
    std::vector<int> j_reps;
    std::vector<int> k_reps;
    int r = 0;
    int s = 0;
    int lambda = 0;
    int line = 0;  // 1-based source line, for diagnostics

    bool operator==(const FixtureSpec&) const = default;
};

std::vector<FixtureSpec> parse_fixtures(std::istream& in);
std::vector<FixtureSpec> parse_fixtures_file(const std::string& path);
std::string serialize_fixture(const FixtureSpec& spec);

FixtureSpec fixture_from_solution(const SolutionRecord& solution);

/// Everything cmd_verify needs per fixture.
struct VerifiedFixture {
    FixtureSpec spec;
    UnitSubgroup subgroup;
    SubsetZv x;
    SubsetZv y;
    SdsParams params;
    std::pair<int, int> square_decomposition;
    PeriodicGolayPair pair;
};

/// Expands the index sets, cross-checks the stated parameters against the
/// derived ones (param_mismatch on disagreement), and runs the pair
/// verification. Throws on any failure.
VerifiedFixture verify_fixture(const FixtureSpec& spec);

/// Plan files use the same key=value line format:
///   v=, H=, r=, s=  (required)
///   forced_x=, forced_y=, excluded_x=, excluded_y=,
///   window_x_from=, window_x_to=, window_y_from=, window_y_to=,
///   psd_slack=, translate_x=   (optional)
SearchPlan parse_plan(std::istream& in);
SearchPlan parse_plan_file(const std::string& path);

}  // namespace pgolay
