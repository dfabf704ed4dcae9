#ifndef OSCINT_CLI_HPP
#define OSCINT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oscint {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad flags, expressions or example ids
inline constexpr int kExitSolver = 3;  // errors raised while integrating

/// Runs `oscint <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, independent of the locale.
std::string format_number(double v);

}  // namespace oscint

#endif  // OSCINT_CLI_HPP
