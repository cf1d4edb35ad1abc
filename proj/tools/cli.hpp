#pragma once

#include <string>
#include <vector>

namespace nsag::cli {

struct CommandResult {
  int exit_code;
  // One line of JSON (help text for --help).
  std::string output;
};

// Arguments exclude the program name. Exit codes: 0 success, 1 domain error,
// 2 usage or parse error.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace nsag::cli
