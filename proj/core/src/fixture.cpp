#include "pgolay/fixture.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pgolay/sds.hpp"

namespace pgolay {

namespace {

std::vector<int> parse_int_list(std::string_view text, int line, std::string_view key) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || (next < end && *next != ',') ||
            (next < end && next + 1 == end)) {
            throw Error(errc::parse_error, "line " + std::to_string(line) + ": bad value for " +
                                               std::string(key));
        }
        out.push_back(value);
        p = next < end ? next + 1 : next;
    }
    return out;
}

int parse_single_int(std::string_view text, int line, std::string_view key) {
    int value = 0;
    auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || next != text.data() + text.size()) {
        throw Error(errc::parse_error,
                    "line " + std::to_string(line) + ": bad integer for " + std::string(key));
    }
    return value;
}

// Splits "key=value" tokens of one line into a map, preserving order checks.
std::map<std::string, std::string, std::less<>> tokenize_kv(std::string_view line, int line_no) {
    std::map<std::string, std::string, std::less<>> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        const std::string_view token = line.substr(pos, end - pos);
        pos = end;
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos) {
            throw Error(errc::parse_error, "line " + std::to_string(line_no) +
                                               ": expected key=value, got '" + std::string(token) +
                                               "'");
        }
        const auto [it, inserted] =
            out.emplace(std::string(token.substr(0, eq)), std::string(token.substr(eq + 1)));
        if (!inserted) {
            throw Error(errc::parse_error, "line " + std::to_string(line_no) +
                                               ": duplicate key '" + it->first + "'");
        }
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    std::string out = hash == std::string::npos ? line : line.substr(0, hash);
    while (!out.empty() && (out.back() == ' ' || out.back() == '\t' || out.back() == '\r')) {
        out.pop_back();
    }
    return out;
}

}  // namespace

std::vector<FixtureSpec> parse_fixtures(std::istream& in) {
    std::vector<FixtureSpec> specs;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (line.empty()) continue;

        std::istringstream head(line);
        std::string tag;
        head >> tag;
        if (tag != "pair") {
            throw Error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": expected 'pair', got '" + tag + "'");
        }
        auto kv = tokenize_kv(line.substr(line.find("pair") + 4), line_no);
        for (const char* key : {"v", "H", "J", "K", "params"}) {
            if (!kv.count(key)) {
                throw Error(errc::parse_error, "line " + std::to_string(line_no) +
                                                   ": missing key '" + key + "'");
            }
        }
        FixtureSpec spec;
        spec.line = line_no;
        spec.v = parse_single_int(kv["v"], line_no, "v");
        spec.h_values = parse_int_list(kv["H"], line_no, "H");
        spec.j_reps = parse_int_list(kv["J"], line_no, "J");
        spec.k_reps = parse_int_list(kv["K"], line_no, "K");
        const std::vector<int> params = parse_int_list(kv["params"], line_no, "params");
        if (params.size() != 3) {
            throw Error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": params needs exactly r,s,lambda");
        }
        spec.r = params[0];
        spec.s = params[1];
        spec.lambda = params[2];
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<FixtureSpec> parse_fixtures_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open " + path);
    }
    return parse_fixtures(in);
}

namespace {

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string serialize_fixture(const FixtureSpec& spec) {
    std::string out = "pair v=" + std::to_string(spec.v);
    out += " H=" + join_ints(spec.h_values);
    out += " J=" + join_ints(spec.j_reps);
    out += " K=" + join_ints(spec.k_reps);
    out += " params=" + std::to_string(spec.r) + "," + std::to_string(spec.s) + "," +
           std::to_string(spec.lambda);
    return out;
}

FixtureSpec fixture_from_solution(const SolutionRecord& solution) {
    FixtureSpec spec;
    spec.v = solution.v;
    spec.h_values = solution.h_elements;
    spec.j_reps = solution.j_reps;
    spec.k_reps = solution.k_reps;
    spec.r = solution.r;
    spec.s = solution.s;
    spec.lambda = static_cast<int>(solution.lambda);
    return spec;
}

VerifiedFixture verify_fixture(const FixtureSpec& spec) {
    UnitSubgroup subgroup = close_subgroup(spec.v, spec.h_values);
    const OrbitTable table = orbit_partition(subgroup);
    SubsetZv x = expand_index_set(table, spec.j_reps);
    SubsetZv y = expand_index_set(table, spec.k_reps);

    if (x.size() != spec.r || y.size() != spec.s) {
        throw Error(errc::param_mismatch,
                    "stated sizes (" + std::to_string(spec.r) + "," + std::to_string(spec.s) +
                        ") but expanded blocks have sizes (" + std::to_string(x.size()) + "," +
                        std::to_string(y.size()) + ")");
    }
    SdsParams params = derive_pair_params(x, y);
    if (params.lambda != spec.lambda) {
        throw Error(errc::param_mismatch,
                    "stated lambda " + std::to_string(spec.lambda) + " but block sizes give " +
                        std::to_string(params.lambda));
    }
    const auto ab = check_square_decomposition(params);
    PeriodicGolayPair pair = verify_periodic_golay_pair(x, y);
    return VerifiedFixture{spec,     std::move(subgroup), std::move(x), std::move(y),
                           std::move(params), ab,          std::move(pair)};
}

SearchPlan parse_plan(std::istream& in) {
    std::map<std::string, std::string, std::less<>> kv;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (line.empty()) continue;
        auto tokens = tokenize_kv(line, line_no);
        for (auto& [key, value] : tokens) {
            if (!kv.emplace(key, value).second) {
                throw Error(errc::parse_error,
                            "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
            }
        }
    }

    static const std::set<std::string, std::less<>> known_keys = {
        "v",          "H",          "r",          "s",           "forced_x",
        "forced_y",   "excluded_x", "excluded_y", "window_x_from", "window_x_to",
        "window_y_from", "window_y_to", "psd_slack", "translate_x"};
    std::vector<std::string> problems;
    for (const auto& [key, value] : kv) {
        if (!known_keys.count(key)) {
            problems.push_back("unknown key '" + key + "'");
        }
    }
    for (const char* key : {"v", "H", "r", "s"}) {
        if (!kv.count(key)) {
            problems.push_back(std::string("missing required key '") + key + "'");
        }
    }
    if (!problems.empty()) {
        std::string message = "invalid plan file:";
        for (const std::string& p : problems) message += "\n  " + p;
        throw Error(errc::parse_error, message);
    }

    SearchPlan plan;
    plan.v = parse_single_int(kv["v"], 0, "v");
    plan.h_generators = parse_int_list(kv["H"], 0, "H");
    plan.r = parse_single_int(kv["r"], 0, "r");
    plan.s = parse_single_int(kv["s"], 0, "s");
    const auto list_or_empty = [&kv](const char* key) {
        return kv.count(key) ? parse_int_list(kv[key], 0, key) : std::vector<int>{};
    };
    plan.forced_x = list_or_empty("forced_x");
    plan.forced_y = list_or_empty("forced_y");
    plan.excluded_x = list_or_empty("excluded_x");
    plan.excluded_y = list_or_empty("excluded_y");
    const auto window_bound = [&kv](const char* key) -> std::optional<std::vector<int>> {
        if (!kv.count(key)) return std::nullopt;
        return parse_int_list(kv[key], 0, key);
    };
    plan.window_x.from = window_bound("window_x_from");
    plan.window_x.to = window_bound("window_x_to");
    plan.window_y.from = window_bound("window_y_from");
    plan.window_y.to = window_bound("window_y_to");
    if (kv.count("psd_slack")) {
        try {
            plan.psd_slack = std::stod(kv["psd_slack"]);
        } catch (const std::exception&) {
            throw Error(errc::parse_error, "bad value for psd_slack");
        }
    }
    if (kv.count("translate_x")) {
        const std::string& value = kv["translate_x"];
        if (value == "1" || value == "true") {
            plan.translate_x = true;
        } else if (value == "0" || value == "false") {
            plan.translate_x = false;
        } else {
            throw Error(errc::parse_error, "bad value for translate_x (use 0/1/true/false)");
        }
    }
    return plan;
}

SearchPlan parse_plan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open " + path);
    }
    return parse_plan(in);
}

}  // namespace pgolay
