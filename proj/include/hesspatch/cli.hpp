#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hesspatch::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one subcommand (gens, gb, tci, gvd-cert, frob, poset, explore).
/// `args` excludes the program name. Reports go to `out` (or to the --out
/// file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hesspatch::cli
