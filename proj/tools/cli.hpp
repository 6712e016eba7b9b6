#ifndef SKYLINE_TOOLS_CLI_HPP_
#define SKYLINE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace skyline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skyline::cli

#endif  // SKYLINE_TOOLS_CLI_HPP_
