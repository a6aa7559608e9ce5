#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace quandle_lab {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// QUANDLE_LAB_SEED when set and numeric, else 0. ParseError for a malformed value.
std::uint64_t default_seed();

}  // namespace quandle_lab
