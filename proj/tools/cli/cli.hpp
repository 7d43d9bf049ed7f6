#pragma once

#include <iosfwd>

namespace sfvs::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kCapacity = 3 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfvs::cli
