#pragma once

#include <iosfwd>

namespace ramabern {

/// Full command-line surface. Returns the process exit code:
/// 0 success, 1 verification failure, 2 argument/domain error,
/// 3 inadmissible Racah parameters.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramabern
