#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ebohr::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kUsageError = 2,
    kHypothesisError = 3,
    kVerificationFailure = 4,
};

/// Runs the command line; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from ELLIPTIC_BOHR_THREADS, else hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace ebohr::cli
