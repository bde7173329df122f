#pragma once

#include <iosfwd>

namespace stairflow {

// Command-line entry point. Exit codes: 0 success, 1 failed verification,
// 2 invalid input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stairflow
