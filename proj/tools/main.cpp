#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = genus1::cli::run_command(args);
  std::cout << result.stdout_text;
  for (const auto& d : result.diagnostics) std::cerr << "genus1: " << d << "\n";
  return result.exit_code;
}
