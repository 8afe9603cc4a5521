#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenscert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // rejection, mismatch or verification failure
inline constexpr int kExitUsage = 2;

/// Entry point of the `lenscert` tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lenscert
