#pragma once

#include <iosfwd>

namespace loopkit {

// Entry point of the loopkit command line tool. Exit codes: 0 success,
// 1 invalid input, 2 violated precondition, 3 internal invariant failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loopkit
