#pragma once

#include <iosfwd>

namespace circulant::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kDisconnected = 3,
  kCertificationFailed = 4,
  kIoError = 5,
};

/// Runs the command line; argv[0] is the program name. Data rows go to `out`
/// (or the --out file), diagnostics to `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circulant::cli
