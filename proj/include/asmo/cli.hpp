#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmo::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kInconsistent = 2;

// Parses the arguments (program name first), runs one subcommand and writes
// its report to `out` (or to --out). Diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asmo::cli
