#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tgha::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  kFailure = 1,    ///< anything not covered below
  kParse = 2,      ///< unreadable or malformed input
  kCocycle = 3,    ///< the cocycle fails verification or is not root-of-unity valued
  kFamily = 4,     ///< a family, PBW, associativity or isomorphism check failed
  kDegreeLaw = 5,  ///< a deformation coefficient broke the degree law
};

struct SessionConfig {
  std::string group_file;
  std::string cocycle = "trivial";  ///< trivial | elem-abelian | sym-cover | table:PATH
  std::optional<std::string> forms_file;
  std::vector<std::string> seeds;   ///< WORD=VALUE
  int bound = 3;
  std::size_t cap = 10000;
  bool force = false;
  bool json = false;
  std::optional<std::string> output;  ///< `forms` writes here instead of stdout
  std::vector<std::string> expressions;

  std::string root_type = "A2";
  std::string k = "1";
  std::optional<std::string> k2;
  bool check = false;
};

struct CommandResult {
  int exit_code = kOk;
  std::string text;
};

CommandResult cmd_classify(const SessionConfig& cfg);
CommandResult cmd_verify(const SessionConfig& cfg);
CommandResult cmd_forms(const SessionConfig& cfg);
CommandResult cmd_multiply(const SessionConfig& cfg);
CommandResult cmd_mu(const SessionConfig& cfg);
CommandResult cmd_pbw_check(const SessionConfig& cfg);
CommandResult cmd_lusztig(const SessionConfig& cfg);

/// Dispatches on the command name; unknown names give kParse.
CommandResult run(const std::string& command, const SessionConfig& cfg);

} // namespace tgha::cli
