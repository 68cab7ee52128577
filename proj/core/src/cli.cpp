#include "pgolay/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "pgolay/conditions.hpp"
#include "pgolay/correlation.hpp"
#include "pgolay/fixture.hpp"
#include "pgolay/hadamard.hpp"
#include "pgolay/orbits.hpp"
#include "pgolay/search.hpp"

namespace pgolay {

namespace {

std::string format_list(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

int map_error_exit(const Error& error) {
    switch (error.code()) {
        case errc::io_error:
            return exit_io_error;
        case errc::parse_error:
        case errc::invalid_argument:
            return exit_usage_error;
        default:
            return exit_verification_failure;
    }
}

}  // namespace

int cmd_verify(const std::string& fixture_path, std::ostream& out, std::ostream& err) {
    std::vector<FixtureSpec> specs;
    try {
        specs = parse_fixtures_file(fixture_path);
    } catch (const Error& error) {
        err << "error: " << error.what() << "\n";
        return map_error_exit(error);
    }
    int failures = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const FixtureSpec& spec = specs[i];
        try {
            const VerifiedFixture fixture = verify_fixture(spec);
            const SquareMatrix h2v = build_hadamard(fixture.pair);
            if (!is_hadamard(h2v)) {
                throw Error(errc::internal, "constructed matrix is not Hadamard");
            }
            out << "PASS #" << i + 1 << " v=" << spec.v << " params=(" << spec.v << ";" << spec.r
                << "," << spec.s << ";" << spec.lambda << ")"
                << " a=" << fixture.square_decomposition.first
                << " b=" << fixture.square_decomposition.second << " hadamard_order="
                << h2v.order() << "\n";
        } catch (const Error& error) {
            ++failures;
            out << "FAIL #" << i + 1 << " v=" << spec.v << " (line " << spec.line
                << "): " << error.what() << "\n";
        }
    }
    out << specs.size() - failures << "/" << specs.size() << " fixtures verified\n";
    return failures == 0 ? exit_ok : exit_verification_failure;
}

int cmd_search(const std::string& plan_path, int jobs, const std::string& out_dir,
               std::ostream& out, std::ostream& err) {
    try {
        const SearchPlan plan = parse_plan_file(plan_path);
        PipelineOptions options;
        options.jobs = jobs;
        if (!out_dir.empty()) {
            options.out_dir = std::filesystem::path(out_dir);
        }
        const PipelineResult result = run_pipeline(plan, options);
        write_report(out, result);
        if (options.out_dir) {
            const auto solutions_path = *options.out_dir / "solutions.txt";
            std::ofstream solutions(solutions_path);
            if (!solutions) {
                throw Error(errc::io_error, "cannot open " + solutions_path.string());
            }
            solutions << "# verified pairs found by 'pgolay search " << plan_path << "'\n";
            for (const SolutionRecord& solution : result.solution_classes) {
                solutions << serialize_fixture(fixture_from_solution(solution)) << "\n";
            }
            out << "wrote " << result.solution_classes.size() << " solution fixture(s) to "
                << solutions_path.string() << "\n";
        }
        return exit_ok;
    } catch (const Error& error) {
        err << "error: " << error.what() << "\n";
        return map_error_exit(error);
    }
}

int cmd_conditions(int range_end, bool open_only, std::ostream& out) {
    if (open_only) {
        for (int v : open_candidates(range_end)) {
            out << v << "\n";
        }
        return exit_ok;
    }
    out << "v     even  two_squares  eks_golay_possible  arasu_xiang  status\n";
    for (int v = 1; v <= range_end; ++v) {
        const LengthVerdict verdict = classify_length(v);
        out << std::left << std::setw(6) << verdict.v << std::setw(6)
            << (verdict.even ? "yes" : "no") << std::setw(13)
            << (verdict.two_squares ? "yes" : "no") << std::setw(20)
            << (verdict.eks_golay_possible ? "yes" : "no") << std::setw(13)
            << (verdict.arasu_xiang_pass ? "yes" : "no") << known_status_name(verdict.known_status)
            << "\n";
    }
    return exit_ok;
}

int cmd_hadamard(const std::string& fixture_path, const std::string& out_dir, bool csv,
                 std::ostream& out, std::ostream& err) {
    std::vector<FixtureSpec> specs;
    try {
        specs = parse_fixtures_file(fixture_path);
        std::filesystem::create_directories(out_dir);
    } catch (const Error& error) {
        err << "error: " << error.what() << "\n";
        return map_error_exit(error);
    }
    int failures = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        try {
            const VerifiedFixture fixture = verify_fixture(specs[i]);
            const SquareMatrix h2v = build_hadamard(fixture.pair);
            if (!is_hadamard(h2v)) {
                throw Error(errc::internal, "constructed matrix is not Hadamard");
            }
            const auto path = std::filesystem::path(out_dir) /
                              ("hadamard_" + std::to_string(h2v.order()) + "_fixture" +
                               std::to_string(i + 1) + (csv ? ".csv" : ".txt"));
            std::ofstream file(path);
            if (!file) {
                throw Error(errc::io_error, "cannot open " + path.string());
            }
            if (csv) {
                write_matrix_csv(file, h2v);
            } else {
                write_matrix_pm(file, h2v);
            }
            out << "wrote order-" << h2v.order() << " matrix: " << path.string() << "\n";
        } catch (const Error& error) {
            ++failures;
            err << "fixture #" << i + 1 << " failed: " << error.what() << "\n";
        }
    }
    return failures == 0 ? exit_ok : exit_verification_failure;
}

int cmd_orbits(int v, const std::vector<int>& generators, std::ostream& out, std::ostream& err) {
    try {
        const UnitSubgroup h = close_subgroup(v, generators);
        const OrbitTable table = orbit_partition(h);
        out << "v=" << v << " H={" << format_list(h.elements()) << "} |H|=" << h.order()
            << " orbits=" << table.orbits().size() << "\n";
        for (const SubsetZv& orbit : table.orbits()) {
            out << orbit.elements().front() << ": " << format_list(orbit.elements()) << "\n";
        }
        return exit_ok;
    } catch (const Error& error) {
        err << "error: " << error.what() << "\n";
        return map_error_exit(error);
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"periodic Golay pair search and verification toolkit"};
    app.require_subcommand(1);

    std::string fixture_path;
    auto* verify = app.add_subcommand("verify", "verify pair fixtures");
    verify->add_option("fixtures", fixture_path, "fixture file")->required();

    std::string plan_path;
    std::string search_out_dir;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    auto* search = app.add_subcommand("search", "run the two-file search pipeline");
    search->add_option("plan", plan_path, "plan file")->required();
    search->add_option("--jobs", jobs, "worker count for enumeration");
    search->add_option("--out", search_out_dir, "directory for candidate/solution files");

    int range_end = 0;
    bool open_only = false;
    auto* conditions = app.add_subcommand("conditions", "length condition report");
    conditions->add_option("range_end", range_end, "largest length to classify")
        ->required()
        ->check(CLI::PositiveNumber);
    conditions->add_flag("--open-only", open_only, "print only open lengths");

    std::string hadamard_fixtures;
    std::string hadamard_out_dir;
    bool hadamard_csv = false;
    auto* hadamard = app.add_subcommand("hadamard", "export Hadamard matrices from fixtures");
    hadamard->add_option("fixtures", hadamard_fixtures, "fixture file")->required();
    hadamard->add_option("--out", hadamard_out_dir, "output directory")->required();
    hadamard->add_flag("--csv", hadamard_csv, "write CSV instead of +/- text");

    int orbit_v = 0;
    std::string orbit_gens;
    auto* orbits = app.add_subcommand("orbits", "print the orbit table of a unit subgroup");
    orbits->add_option("--v", orbit_v, "modulus")->required()->check(CLI::PositiveNumber);
    orbits->add_option("--gens", orbit_gens, "comma-separated generators")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return exit_ok;
        }
        err << "usage error: " << e.what() << "\n";
        return exit_usage_error;
    }

    if (*verify) return cmd_verify(fixture_path, out, err);
    if (*search) return cmd_search(plan_path, jobs, search_out_dir, out, err);
    if (*conditions) return cmd_conditions(range_end, open_only, out);
    if (*hadamard) return cmd_hadamard(hadamard_fixtures, hadamard_out_dir, hadamard_csv, out, err);
    if (*orbits) {
        std::vector<int> generators;
        try {
            std::size_t pos = 0;
            while (pos <= orbit_gens.size() && !orbit_gens.empty()) {
                const std::size_t comma = orbit_gens.find(',', pos);
                const std::string part =
                    orbit_gens.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
                generators.push_back(std::stoi(part));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } catch (const std::exception&) {
            err << "usage error: bad generator list '" << orbit_gens << "'\n";
            return exit_usage_error;
        }
        return cmd_orbits(orbit_v, generators, out, err);
    }
    return exit_usage_error;
}

}  // namespace pgolay
