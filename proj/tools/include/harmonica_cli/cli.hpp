#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace harmonica::cli {

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kInputError = 2, kBudget = 3 };

struct CommandConfig {
  std::string subcommand;  // verify | quotient | profile | construct | cover | census | export-dot

  std::string graph_path;
  std::string action_path;
  std::string morphism_path;
  std::string target_path;
  std::string voltages_path;
  std::string out;  // file or directory, depending on the subcommand

  std::string family;
  std::optional<int> g;
  std::optional<int> n;
  std::optional<int> m;
  std::string tree = "edge";
  std::string group = "cyclic:3";

  int genus = 2;
  std::size_t max_vertices = 6;
  std::size_t jobs = 1;

  std::size_t budget = 256;  // subgroup-enumeration budget
  std::size_t aut_budget = 100000;
  bool by_definition = false;
};

/// Parses argv; on --help or a usage error prints to `out`/`err` and returns
/// the exit code to use instead of a config.
struct Parsed {
  std::optional<CommandConfig> config;
  int exit_code = kOk;
};
Parsed parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one subcommand. Library errors are mapped onto exit codes.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line followed by run.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmonica::cli
