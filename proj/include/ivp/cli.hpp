// Command dispatch for the `ivp` tool, kept in the library so it can be tested in-process.
#ifndef IVP_CLI_HPP
#define IVP_CLI_HPP

#include <map>
#include <string>
#include <vector>

namespace ivp::cli {

struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> flags;  ///< without the leading "--"
  std::vector<std::string> positionals;
  bool json = false;
  std::string stdin_text;  ///< consumed by `verify --stdin`
};

struct CommandResult {
  int exit_code = 0;  ///< 0 ok, 1 domain error, 2 parse/usage error
  std::string output;
};

struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> flags;  ///< accepted value flags
  std::vector<std::string> bool_flags;
  std::size_t min_positionals = 0;
  std::size_t max_positionals = 0;
};

const std::vector<CommandInfo>& commands();

CommandResult run(const CommandRequest& request);

}  // namespace ivp::cli

#endif  // IVP_CLI_HPP
