#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperseq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failure or mismatch
inline constexpr int kExitUsage = 2;   // usage, parse or domain error

// Runs the hyperseq command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hyperseq::cli
