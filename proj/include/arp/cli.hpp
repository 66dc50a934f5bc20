#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arp::cli {

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,        // success, or certificate accepted
    kReject = 1,    // certificate rejected (check only)
    kUsage = 2,
    kInputError = 3,
    kTimeout = 4,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace arp::cli
