#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/problem.hpp"

namespace dfsum::cli {

enum ExitCode : int { Ok = 0, ParseFailure = 1, Capability = 2, NotSummableExit = 3, UnknownExit = 4, Internal = 5 };

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::optional<ProblemSpec> problem;
  bool machine = false;
};

// Runs one command; all library errors are mapped to exit codes here.
int run_command(const Invocation& inv, std::ostream& out, std::ostream& err);

std::vector<std::string> command_names();

}  // namespace dfsum::cli
