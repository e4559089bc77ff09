#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blindsat::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

/// Runs one command line (without the program name). Output is written to
/// `out` only once the command has fully succeeded; on failure `out` receives
/// a single error record in the requested format and `err` a readable message.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace blindsat::cli
