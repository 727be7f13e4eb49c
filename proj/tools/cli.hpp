#pragma once

#include <iosfwd>

namespace fracdirac::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidArguments = 2 };

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracdirac::cli
