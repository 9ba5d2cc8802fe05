#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace noocli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDiverged = 2;

// Entry point behind main(). `args` excludes the program name. Returns the
// process exit code: 0 success, 1 usage/parse/model error, 2 divergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noocli
