#pragma once

#include <iosfwd>

namespace mcg::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs one command line. argv[0] is the program name. Regular output goes
/// to `out`, one-line diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcg::cli
