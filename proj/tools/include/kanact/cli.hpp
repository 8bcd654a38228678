#pragma once

#include <iosfwd>

namespace kanact {

/// Exit status: 0 all checks passed, 1 a conclusion failed, 2 a hypothesis
/// failed, 3 bad input.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitHypothesis = 2, kExitInput = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kanact
