#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcg::cli {

/// Runs one CLI invocation. `args` excludes the program name. All JSON output
/// goes to `out`, diagnostics to `err`. Exit codes: 0 yes/success, 1 no,
/// 2 usage, parse or scale errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tcg::cli
