#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rsub::tools {

// Exit codes shared by every subcommand.
enum ExitCode : int { kExitFound = 0, kExitNone = 1, kExitInputError = 2, kExitIndeterminate = 3 };

// Relative --input/--output style paths are resolved against this directory
// when the variable is set.
inline constexpr const char* kDataDirEnv = "RSUB_DATA_DIR";

// Runs one command line; args[0] is the program name. Artifacts go to
// --output files or, when absent, to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Fixed configurations of the Monte Carlo estimators swept over lambda and p;
// CSV in the report format.
std::string mc_trends_csv(std::uint64_t seed);

}  // namespace rsub::tools
