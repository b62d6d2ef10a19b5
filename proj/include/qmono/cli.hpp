#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmono {

/// Runs the command-line tool on already-split arguments (no program name).
/// Exit codes: 0 success / PASS, 1 check FAIL, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmono
