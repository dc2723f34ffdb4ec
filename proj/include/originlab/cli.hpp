#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace originlab::cli {

/// Exit codes of the `originlab` binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitUnbounded = 3;
inline constexpr int kExitInternal = 64;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, the reproducibility header and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace originlab::cli
