#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "permlab/universe.hpp"

namespace permlab::cli {

enum class OutputFormat { text, json };

struct RunConfig {
  std::string input_path;
  std::size_t depth = 2;
  std::size_t index_budget = 3;
  std::size_t support_budget = 1;
  std::size_t max_supports = 4096;
  OutputFormat output_format = OutputFormat::text;
  std::size_t size_cap = kDefaultSizeCap;
  std::uint64_t seed = 0;
  bool complete = false;
};

/// Exit codes: 0 success, 1 user or input error, 2 internal invariant breach.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult cmd_validate(const RunConfig& config);
CommandResult cmd_report(const RunConfig& config);
CommandResult cmd_closure(const RunConfig& config, const std::vector<std::string>& atoms);
CommandResult cmd_move(const RunConfig& config, const std::vector<std::string>& support,
                       const std::string& atom);
CommandResult cmd_orbits(const RunConfig& config, const std::vector<std::string>& support);
/// kind is "injection" or "surjection".
CommandResult cmd_refute(const RunConfig& config, const std::string& kind, const std::string& p,
                         const std::string& q, const std::vector<std::string>& support);
CommandResult cmd_enumerate(std::size_t n, OutputFormat format);

/// Parses argv and dispatches; writes the command's streams and returns its exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace permlab::cli
