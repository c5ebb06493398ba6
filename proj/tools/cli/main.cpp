#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "dfsum/errors.hpp"

int main(int argc, char** argv) {
  using namespace dfsum::cli;
  CLI::App app{"Exact summation in difference fields with scaling automorphisms"};
  std::string problem_path;
  long bound = -1, cap = -1;
  Invocation inv;
  std::string commands;
  for (const auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", inv.command, "one of: " + commands)->required();
  app.add_option("args", inv.args, "command arguments, e.g. 'demo tribonacci 20' or 'spread P Q'");
  app.add_option("--problem", problem_path, "problem file, '-' for stdin");
  app.add_option("--bound", bound, "search bound for multiplicative relations")->check(CLI::Range(0L, 1000L));
  app.add_option("--degree-cap", cap, "total degree cap for multivariate factorization")->check(CLI::Range(1L, 1000L));
  app.add_flag("--machine", inv.machine, "print JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ParseFailure;
  }

  try {
    std::string text;
    bool have = false;
    if (problem_path == "-" || (problem_path.empty() && inv.command != "demo" && !isatty(STDIN_FILENO))) {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
      have = true;
    } else if (!problem_path.empty()) {
      std::ifstream in(problem_path);
      if (!in) {
        std::cerr << "error: cannot read " << problem_path << "\n";
        return ParseFailure;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
      have = true;
    }
    if (have) inv.problem = parse_problem(text);
    if (inv.problem && bound >= 0) inv.problem->options.search_bound = static_cast<int>(bound);
    if (inv.problem && cap > 0) inv.problem->options.degree_cap = static_cast<unsigned>(cap);
  } catch (const dfsum::ParseError& e) {
    std::cerr << "error: problem file: " << e.what() << "\n";
    return ParseFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ParseFailure;
  }
  return run_command(inv, std::cout, std::cerr);
}
