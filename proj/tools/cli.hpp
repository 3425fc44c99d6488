#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asdn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

/// Environment variable that overrides the output directory of `run` and
/// `preset` unless --out is given.
inline constexpr const char* kOutputDirEnv = "ASDN_OUTPUT_DIR";

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asdn::cli
