#pragma once

#include <ostream>

namespace mbb {

enum ExitCode {
  ExitOk = 0,
  ExitUsage = 1,
  ExitParse = 2,
  ExitMath = 3,
  ExitPropertyFailed = 4
};

/// Entry point of the command line tool; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace mbb
