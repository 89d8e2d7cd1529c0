#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oitdr::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // infeasible, invalid labeling, or a failed verification
  kUsage = 2,     // bad arguments, unreadable or malformed input
  kBudget = 3,    // time budget exhausted
};

/// Environment variable that replaces the default 60000 ms budget.
inline constexpr const char* kBudgetEnv = "OITDR_BUDGET_MS";

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oitdr::cli
