#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace genus1::cli {

enum class Status { Ok, Error };

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  int exit_code = 0;   // 0 ok, 1 domain error, 2 usage error
  std::string stdout_text;  // what the tool prints on stdout
};

/// Runs one invocation; `args` excludes the program name. Never throws.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace genus1::cli
