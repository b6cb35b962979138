// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestlp {

/// Exit statuses of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_resource = 3 };

/// Runs one invocation; `args` excludes the program name. Files named by -i/-j/-o
/// are opened directly, otherwise `in` and `out` are used.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nestlp
