#pragma once

#include "trib/zint.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trib::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1, // verification or cross-method consistency failure
    exit_usage = 2,
};

/// "lo:hi" with optional signs, e.g. "-50:200".
std::optional<std::pair<Index, Index>> parse_range(std::string_view text);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trib::cli
