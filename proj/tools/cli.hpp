#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swh::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kParseError = 2,
    kAlphabetMismatch = 3,
    kModeMisuse = 4,
};

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swh::cli
