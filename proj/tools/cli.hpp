#pragma once

#include <iosfwd>

namespace hiveflow::cli {

enum Exit : int { Ok = 0, NotPositive = 1, InvalidInput = 2, CapHit = 3 };

/// Entry point shared by the executable and the tests; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Quick invariant suites; HIVEFLOW_SEED picks the random stream.
int selftest(std::ostream& out, std::ostream& err);

} // namespace hiveflow::cli
