#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycomp {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command. args excludes the program name. Output goes to `out`
/// only on success; errors are written to `err` in full.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycomp
