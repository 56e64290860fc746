#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "premon/budget.hpp"

namespace premon::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2, kInconclusive = 3 };

/// Budget defaults before per-family relation budgets are applied.
struct BudgetConfig {
  std::size_t chain_depth = 30;
  std::size_t factor_cap = 6;
  std::size_t node_cap = 1'000'000;
  std::size_t exponent_cap = 8;
  std::size_t radius = 6;

  /// JSON object with any of the keys above; throws ParseError.
  static BudgetConfig from_file(const std::string& path);
  [[nodiscard]] SearchBudget for_family(const std::string& family) const;
};

/// Environment variable naming the budget config file.
inline constexpr const char* kConfigEnv = "PREMON_CONFIG";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace premon::cli
