#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nilorb/json_io.hpp"

namespace nilorb::cli {

enum class Status { Ok, Error };

struct CommandResult {
  Status status = Status::Ok;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
  int exit_code = 0;  // 0 ok, 1 failed checks or bad data, 2 usage or invalid input
};

Json to_json(const CommandResult& result);

/// Renders a JSON document as "path: value" lines, one per scalar leaf.
std::string render_text(const Json& doc);

/// Entry point shared by the executable and the tests; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb::cli
