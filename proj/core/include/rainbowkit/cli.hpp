#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rainbow {

/// One CLI invocation's outcome. The result payload is the JSON object
/// printed to stdout; wall time goes to stderr so identical inputs give
/// byte-identical stdout.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> input_digests;
  std::string result_json;
  double wall_ms = 0.0;
  int exit_code = 0;  // 0 ok, 1 "no"-type decision, 2 error
};

/// Runs one subcommand. `args` excludes the program name.
RunReport cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

/// main() adapter for the rainbowkit binary.
int cli_main(int argc, char** argv);

}  // namespace rainbow
