/**
 * @file cli_app.hpp
 * @brief Entry point of the command-line surface, separated from main() so
 *        tests can drive it with injected streams.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordered_pricing::cli {

/// Parses `args` (without the program name) and executes one subcommand,
/// reading piped documents from `in` and writing the JSON report to `out`.
/// Returns 0 on success, 2 on validation/usage errors, 3 when an enumeration
/// budget is exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ordered_pricing::cli
