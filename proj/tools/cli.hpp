#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace karytree::cli {

/// Exit codes shared by every subcommand.
enum ExitStatus : int {
    kAffirmative = 0,
    kProvenNegative = 1,
    kIndeterminate = 2,
    kUsageError = 3,
};

/// Runs one command line (args excludes the program name).
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
