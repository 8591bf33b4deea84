#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace figdraw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Pictures, text and
/// CSV go to `out`, diagnostics to `err`. Returns 0 on success, 2 for usage
/// errors (unknown command or flag, malformed or out-of-range arguments) and
/// 1 for errors raised while computing.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// The text printed by `--help`.
[[nodiscard]] std::string help_text();

} // namespace figdraw::cli
