#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgolay {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage_error = 2;
inline constexpr int exit_io_error = 3;

int cmd_verify(const std::string& fixture_path, std::ostream& out, std::ostream& err);
int cmd_search(const std::string& plan_path, int jobs, const std::string& out_dir,
               std::ostream& out, std::ostream& err);
int cmd_conditions(int range_end, bool open_only, std::ostream& out);
int cmd_hadamard(const std::string& fixture_path, const std::string& out_dir, bool csv,
                 std::ostream& out, std::ostream& err);
int cmd_orbits(int v, const std::vector<int>& generators, std::ostream& out, std::ostream& err);

/// Full argument parsing + dispatch; what main() calls.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgolay
