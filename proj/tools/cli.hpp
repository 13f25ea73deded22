#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zclosure::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSizeCap = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 2 validation error,
/// 3 size cap exceeded, 1 internal error or a failing check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zclosure::cli
