#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = nsag::cli::run_command(args);
  std::cout << result.output << "\n";
  return result.exit_code;
}
