// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acctab::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitLintErrors = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsageError = 3;

/// Runs one invocation: argv without the program name. Reads "-" inputs from
/// `in`, writes results to `out` (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace acctab::cli
