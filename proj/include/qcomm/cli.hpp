#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcomm {

/// Entry point behind the qcomm executable, separated so tests can
/// drive it in-process. Returns the process exit code: 0 when the
/// command succeeded and every check passed, 1 for verification or
/// computation failures, 2 for usage, parse and typing errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcomm
