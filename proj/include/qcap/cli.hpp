#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcap::cli {

// Exit codes: 0 success, 1 usage error, 2 validation/parse error,
// 3 only infeasible results where a feasible one was required.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;

/// Run the command line given argv-style arguments (without the program
/// name). Writes data output to out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcap::cli
