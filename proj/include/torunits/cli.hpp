#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace torunits::cli {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_validation = 2, exit_undetermined = 3 };

/// args excludes the program name. JSON goes to out (or --output), messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code_for(const std::exception_ptr& e);

/// Seconds since the epoch as ISO 8601 UTC; SOURCE_DATE_EPOCH when set.
std::string manifest_timestamp();

}  // namespace torunits::cli
