#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;  // counterexample found / check failed
inline constexpr int kExitDataError = 65;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

inline constexpr int kSchemaVersion = 1;

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
