#pragma once

#include <string>
#include <vector>

namespace veegroups {

struct CliResult {
  int exit_code = 0;
  std::string output;  // report body (stdout)
  std::string error;   // diagnostics (stderr)
};

/// Runs one command line (argv without the program name).  Never throws:
/// usage problems exit 2, size-cap refusals exit 3, internal faults exit 1.
CliResult run_cli(const std::vector<std::string>& args);

/// Thin argv adapter around run_cli for tools/main.cpp.
int cli_main(int argc, char** argv);

}  // namespace veegroups
