#pragma once

// The phirep command line. Exit codes: 0 success, 1 discrepancy found,
// 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace phirep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phirep
