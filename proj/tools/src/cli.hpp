#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pseudoprob::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// (or --out), diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pseudoprob::cli
