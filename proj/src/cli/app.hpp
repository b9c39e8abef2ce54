#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringdecay::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the CLI on argv[1..] (program name excluded). Data goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ringdecay::cli
