#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace opn::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

struct CommandResult {
  int exit_code = kUsageError;
  /// Structured report; null when parsing failed before a suite ran.
  nlohmann::json payload;
  /// What goes to stdout (JSON text with --json, a table otherwise).
  std::string out;
  /// Diagnostics for stderr.
  std::string err;
};

/// argv excluding the program name.
CommandResult run(const std::vector<std::string>& args);

/// "1,5,9,...,97" style lists: explicit terms, with "..." continuing the
/// progression set by the two preceding terms up to the term after it.
std::vector<std::uint64_t> parse_progression_list(const std::string& text);

}  // namespace opn::cli
