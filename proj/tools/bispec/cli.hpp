#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bispec::cli {

/// Exit codes: 0 every verdict holds, 1 some verdict fails, 2 usage or
/// parse error, 3 internal error.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs one invocation. The JSON report goes to `out`, the summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bispec::cli
