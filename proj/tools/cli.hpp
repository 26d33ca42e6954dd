#ifndef PCST_TOOLS_CLI_HPP
#define PCST_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pcst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one command. `args` excludes the program name. Reports go to the
/// -o file when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcst::cli

#endif  // PCST_TOOLS_CLI_HPP
