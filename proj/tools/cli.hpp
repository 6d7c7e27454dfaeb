#pragma once

namespace zl::cli {

// Parse argv and run one subcommand.  Exit codes: 0 success, 1 validation /
// usage error, 2 numerical failure or I/O error.
int dispatch(int argc, const char *const *argv);

inline constexpr const char *kToolName = "zladder";
inline constexpr const char *kToolVersion = "1.0.0";

}  // namespace zl::cli
