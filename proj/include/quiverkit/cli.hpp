#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// One row per library operation: the subcommand that exposes it.
struct CommandInfo {
  std::string verb;
  std::string subcommand;  // empty when the verb itself runs the operation
  std::string operation;
};

const std::vector<CommandInfo>& command_table();

// args excludes the program name. "-" as an input path reads standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverkit::cli
