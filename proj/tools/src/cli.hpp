#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulerperc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Directory used for outputs when --out is omitted, if set.
inline constexpr const char* kOutDirEnv = "EULERPERC_OUT_DIR";

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Reports go to `out` unless --out names a file; diagnostics go to `err`.
/// Returns kExitOk, kExitUsage or kExitVerificationFailed.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerperc::cli
