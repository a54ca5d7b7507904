#pragma once

// Command implementations behind the CLI: each returns an exit code, the
// JSON document and a table rendering, so they are directly testable.
// Exit codes: 0 success, 2 input error, 3 not admissible, 4 internal
// invariant violation.

#include <string>

#include "redih/json_io.hpp"

namespace redih {

struct CommandResult {
  int exit_code = 0;
  nlohmann::json output;
  std::string table;
};

struct CommandFlags {
  int check_scaling = 0;  // rerun with the scaled polytope and compare
};

CommandResult cmd_check(const ProblemInput& input);
CommandResult cmd_orbits(const ProblemInput& input);
CommandResult cmd_ih(const ProblemInput& input, const CommandFlags& flags = {});
CommandResult cmd_toric(const ProblemInput& input, const CommandFlags& flags = {});
CommandResult cmd_oracle(const ProblemInput& input);

// Wraps a command body with the uniform error-to-exit-code mapping.
int run_cli(int argc, char** argv);

}  // namespace redih
