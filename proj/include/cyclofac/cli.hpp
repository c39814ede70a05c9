#pragma once

// Command-line front end. Exit codes: 0 irreducible / separable / success,
// 1 reducible / not separable, 2 hypothesis not met or undecided,
// 64 usage error, 65 data error, 70 internal error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclofac {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclofac
