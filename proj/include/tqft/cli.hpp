#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tqft::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is one of the codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqft::cli
