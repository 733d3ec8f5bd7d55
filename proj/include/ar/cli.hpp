#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ar::cli {

struct RunConfig {
  std::string command;
  std::string directive;
  int d = 3;
  std::size_t length = 100000;
  std::size_t max_window = 1000;
  std::optional<std::int64_t> c;
  std::string kind = "plain";
  std::string format = "json";
  std::string output;  // empty: standard output
};

enum ExitCode : int { success = 0, check_failed = 1, invalid_input = 2 };

// args excludes the program name. Reports go to `out` (or --output),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ar::cli
