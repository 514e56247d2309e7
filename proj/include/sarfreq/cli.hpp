#ifndef SARFREQ_CLI_HPP
#define SARFREQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sarfreq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "LO..HI" (or a single "B").
struct BudgetSpec {
  int lo;
  int hi;
};
BudgetSpec parse_budgets(const std::string& text);

}  // namespace sarfreq::cli

#endif  // SARFREQ_CLI_HPP
