#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cipherselect::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kKatFailure = 2,
    kInfeasible = 3,
    kIoOrSchema = 4,
};

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cipherselect::cli
